#![no_main]

use fences::{parse_vector, render_vector};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(v) = parse_vector(s) else { return };
    let rendered = render_vector(&v);
    assert_eq!(parse_vector(&rendered).unwrap(), v);
    assert_eq!(render_vector(&parse_vector(&rendered).unwrap()), rendered);
});
