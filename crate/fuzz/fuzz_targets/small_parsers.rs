#![no_main]

use fences::unitary_ds::ShuffleWord;
use fences::GroupPair;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = s.parse::<GroupPair>() {
        assert_eq!(g.to_string().parse::<GroupPair>().unwrap(), g);
    }
    if let Ok(w) = s.parse::<ShuffleWord>() {
        assert_eq!(w.to_string().parse::<ShuffleWord>().unwrap(), w);
        assert_eq!(w.p() + w.q(), w.permutation().len());
    }
});
