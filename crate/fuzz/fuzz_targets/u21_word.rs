#![no_main]

use fences::unitary_ds::{u21_limit_query, U21Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(w) = s.parse::<U21Word>() else { return };
    assert_eq!(w.to_string().parse::<U21Word>().unwrap(), w);
    let _ = u21_limit_query(&w);
    let _ = w.chamber();
});
