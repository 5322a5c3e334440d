#![no_main]

use fences::InterleavingPattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(d) = serde_json::from_slice::<InterleavingPattern>(data) else { return };
    let text = serde_json::to_string(&d).unwrap();
    assert_eq!(serde_json::from_str::<InterleavingPattern>(&text).unwrap(), d);
});
