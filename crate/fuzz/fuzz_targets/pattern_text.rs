#![no_main]

use fences::{classify, satisfies, InterleavingPattern};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(d) = s.parse::<InterleavingPattern>() else { return };
    let again: InterleavingPattern = d.to_string().parse().expect("display re-parses");
    assert_eq!(again, d);
    if d.is_strict() && d.n() + d.m() <= 64 {
        let mut x = vec![fences::Rational::ZERO; d.n()];
        let mut y = vec![fences::Rational::ZERO; d.m()];
        let len = d.word().len() as i64;
        for (k, l) in d.word().iter().enumerate() {
            let v = fences::Rational::int(len - k as i64);
            match *l {
                fences::Label::X(i) => x[i - 1] = v,
                fences::Label::Y(j) => y[j - 1] = v,
            }
        }
        let p = fences::ParamPoint::new(x, y);
        assert!(satisfies(&d, &p).unwrap());
        assert_eq!(classify(&p).unwrap(), d);
    }
});
