#![no_main]

use fences::FactStore;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(store) = FactStore::from_jsonl(s) else { return };
    let back = FactStore::from_jsonl(&store.to_jsonl()).expect("serialized store re-parses");
    assert_eq!(back, store);
    assert_eq!(store.merge(&store).expect("self merge"), store);
});
