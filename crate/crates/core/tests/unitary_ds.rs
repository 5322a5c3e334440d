mod common;

use common::{binomial, h, r, rng};
use fences::patterns::Relation;
use fences::translation::ProvenanceStep;
use fences::unitary_ds::{
    epsilon, ggp_fact, ggp_transport, holo_seed, merge, split, u21_audit, u21_cases,
    u21_limit_query, u21_query, validate_hc, ShuffleWord, Sign, U21Word,
};
use fences::{
    satisfies, Error, FactStore, ParamPoint, Rational, TheoremTag, Verdict, VerdictValue,
};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

fn random_hc<R: Rng>(g: &mut R, p: usize, q: usize) -> Vec<Rational> {
    let eps = epsilon(p, q);
    let mut pool: Vec<Rational> = (-12..=12).map(|k| eps + r(k)).collect();
    pool.shuffle(g);
    let mut a = pool[..p].to_vec();
    let mut b = pool[p..p + q].to_vec();
    a.sort_by(|u, v| v.cmp(u));
    b.sort_by(|u, v| v.cmp(u));
    a.into_iter().chain(b).collect()
}

#[test]
fn split_merge_round_trip() {
    let mut g = rng(11);
    for _ in 0..1000 {
        let (p, q) = (g.gen_range(0..=4), g.gen_range(0..=4));
        if p + q == 0 {
            continue;
        }
        let lambda = validate_hc(p, q, &random_hc(&mut g, p, q)).unwrap();
        let label = split(&lambda);
        assert!(label.lambda_plus.windows(2).all(|w| w[0] > w[1]));
        assert_eq!((label.w.p(), label.w.q()), (p, q));
        assert_eq!(merge(&label).unwrap(), lambda);
        let json = serde_json::to_string(&label).unwrap();
        assert_eq!(
            serde_json::from_str::<fences::unitary_ds::DSLabel>(&json).unwrap(),
            label
        );
    }
}

#[test]
fn shuffle_counts_and_permutation_model() {
    for n in 0..=6usize {
        for p in 0..=n {
            let q = n - p;
            let words = ShuffleWord::all(p, q);
            assert_eq!(words.len(), binomial(n, p));
            // Reference model: permutations whose restrictions to both blocks are increasing.
            let reference: HashSet<Vec<usize>> = (0..n)
                .permutations(n)
                .filter(|s| {
                    s[..p].windows(2).all(|w| w[0] < w[1]) && s[p..].windows(2).all(|w| w[0] < w[1])
                })
                .collect();
            let ours: HashSet<Vec<usize>> = words.iter().map(ShuffleWord::permutation).collect();
            assert_eq!(ours, reference, "p={p} q={q}");
        }
    }
    let u21: Vec<String> = ShuffleWord::all(2, 1)
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(u21, ["++-", "+-+", "-++"]);
    assert_eq!(ShuffleWord::all(0, 3)[0].0, vec![Sign::Minus; 3]);
}

#[test]
fn validation_examples() {
    assert!(validate_hc(1, 1, &[h(3), h(-1)]).is_ok());
    assert!(validate_hc(2, 1, &[r(2), r(0), r(1)]).is_ok());
    for bad in [[r(2), r(2), r(1)], [r(0), r(2), r(1)], [r(2), r(1), r(1)]] {
        assert!(matches!(validate_hc(2, 1, &bad), Err(Error::Domain(_))));
    }
    let l = split(&validate_hc(2, 1, &[r(2), r(0), r(1)]).unwrap());
    assert_eq!(
        (l.lambda_plus, l.w.to_string()),
        (vec![r(2), r(1), r(0)], "+-+".to_string())
    );
}

#[test]
fn u21_audit_counts() {
    let rows = u21_audit(false).unwrap();
    assert_eq!(rows.len(), 60);
    let count = |v: VerdictValue| rows.iter().filter(|r| r.verdict.value == v).count();
    assert_eq!(count(VerdictValue::NonZero), 6);
    assert_eq!(count(VerdictValue::Zero), 24);
    assert_eq!(count(VerdictValue::Unknown), 30);
    let words: HashSet<String> = rows.iter().map(|r| r.word.to_string()).collect();
    assert_eq!(words.len(), 60);
    for row in &rows {
        let tags = row.verdict.tags();
        match row.verdict.value {
            VerdictValue::NonZero => assert_eq!(tags, vec![TheoremTag::TableHe]),
            VerdictValue::Zero => assert_eq!(tags, vec![TheoremTag::TauVanish]),
            _ => assert!(tags.is_empty()),
        }
    }
    let nonzero: HashSet<String> = rows
        .iter()
        .filter(|r| r.verdict.value == VerdictValue::NonZero)
        .map(|r| r.word.to_string())
        .collect();
    let table: HashSet<String> = u21_cases().iter().map(|c| c.word.to_string()).collect();
    assert_eq!(nonzero, table);

    let assumed = u21_audit(true).unwrap();
    assert_eq!(
        assumed
            .iter()
            .filter(|r| r.verdict.value == VerdictValue::Zero)
            .count(),
        54
    );
}

#[test]
fn only_case_two_is_coherent() {
    let cases = u21_cases();
    assert_eq!(cases.len(), 6);
    let coherent: Vec<&str> = cases.iter().filter(|c| c.coherent).map(|c| c.id).collect();
    assert_eq!(coherent, ["II"]);
    let patterns: HashSet<String> = cases.iter().map(|c| c.word.to_string()).collect();
    assert_eq!(patterns.len(), 6);
    assert_eq!(cases.iter().map(|c| c.limits.len()).sum::<usize>(), 8);
}

#[test]
fn table_limits_relax_one_relation() {
    for case in u21_cases() {
        for limit in &case.limits {
            // relaxing the single tie, in either order of the tied labels, recovers the strict word
            let k = limit
                .relations()
                .iter()
                .position(|r| *r == Relation::Equal)
                .unwrap();
            let strict = vec![Relation::Strict; 4];
            let mut swapped = limit.labels().to_vec();
            swapped.swap(k, k + 1);
            let candidates = [
                U21Word::new(limit.labels().to_vec(), strict.clone()).unwrap(),
                U21Word::new(swapped, strict).unwrap(),
            ];
            assert!(candidates.contains(&case.word), "{limit} vs {}", case.word);
            assert_eq!(u21_limit_query(limit).unwrap().value, VerdictValue::NonZero);
        }
    }
    let unlisted: U21Word = "x1 = xi > x2 > y > eta".parse().unwrap();
    assert_eq!(
        u21_limit_query(&unlisted).unwrap().value,
        VerdictValue::Unknown
    );
    let two: U21Word = "x1 = xi > x2 = y > eta".parse().unwrap();
    assert!(matches!(u21_limit_query(&two), Err(Error::Domain(_))));
}

#[test]
fn u21_worked_queries() {
    assert_eq!(
        u21_query(r(5), r(2), r(1), h(7), h(-1), false)
            .unwrap()
            .value,
        VerdictValue::NonZero
    );
    assert_eq!(
        u21_query(r(5), r(4), r(1), h(7), h(-1), false)
            .unwrap()
            .value,
        VerdictValue::Zero
    );
    assert_eq!(
        u21_query(r(5), r(4), r(1), h(13), h(-1), false)
            .unwrap()
            .value,
        VerdictValue::Zero
    );
    assert!(matches!(
        u21_query(r(3), r(3), r(1), h(1), h(-1), false),
        Err(Error::Domain(_))
    ));
}

#[test]
fn holo_seed_satisfies_its_pattern() {
    let mut g = rng(3);
    let mut built = 0;
    for _ in 0..600 {
        let (p, q) = (g.gen_range(1..=4), g.gen_range(0..=3));
        let off = Rational::new(p as i64 + q as i64 - 2, 2);
        let mut pool: Vec<Rational> = (-10..=10).map(|k| off + r(k)).collect();
        pool.shuffle(&mut g);
        let mut chamber = pool[..p + q - 1].to_vec();
        chamber.sort_by(|a, b| b.cmp(a));
        // chamber order is nu_p > .. > nu_{p+q-1} > nu_1 > .. > nu_{p-1}
        let nu: Vec<Rational> = chamber[q..].iter().chain(&chamber[..q]).copied().collect();
        match holo_seed(&nu, p, q) {
            Ok(s) => {
                built += 1;
                assert!(s.pattern.is_strict());
                assert!(satisfies(
                    &s.pattern,
                    &ParamPoint::new(s.lambda_plus.clone(), s.nu_plus.clone())
                )
                .unwrap());
                for j in 1..=q {
                    assert_eq!(s.lambda[p + j - 1], nu[p + j - 2] - Rational::HALF);
                }
                assert!(validate_hc(p, q, &s.lambda).is_ok());
            }
            Err(Error::Domain(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(built > 300);
    assert!(matches!(holo_seed(&[h(1)], 1, 1), Err(Error::Domain(_))));
}

#[test]
fn ggp_constancy_over_the_pattern() {
    let mut g = rng(8);
    let (p, q) = (2usize, 1usize);
    let w: ShuffleWord = "+-+".parse().unwrap();
    let w2: ShuffleWord = "+-".parse().unwrap();
    let seed = ggp_fact(
        p,
        q,
        &w,
        &w2,
        &[r(5), r(3), r(0)],
        &[h(9), h(1)],
        Verdict::nonzero(ProvenanceStep::new(TheoremTag::TableHe, "seed")),
    )
    .unwrap();
    let d = seed.pattern.clone();
    let mut store = FactStore::new();
    store.insert(seed).unwrap();
    let mut hits = 0;
    for _ in 0..2000 {
        let lp = random_hc(&mut g, 3, 0);
        let mut np: Vec<Rational> = (0..2)
            .map(|_| h(2 * g.gen_range(-12i64..=12) + 1))
            .collect();
        np.sort_by(|a, b| b.cmp(a));
        let inside = satisfies(&d, &ParamPoint::new(lp.clone(), np.clone())).unwrap();
        let v = ggp_transport(p, q, &w, &w2, &d, &store, &lp, &np);
        if inside {
            hits += 1;
            let v = v.unwrap();
            assert_eq!(v.value, VerdictValue::NonZero);
            assert_eq!(v.tags(), vec![TheoremTag::TableHe, TheoremTag::Ggp]);
        } else {
            assert!(matches!(v, Err(Error::Domain(_))));
        }
    }
    assert!(hits > 20);
    let empty = ggp_transport(
        p,
        q,
        &w,
        &w2,
        &d,
        &FactStore::new(),
        &[r(5), r(3), r(0)],
        &[h(9), h(1)],
    )
    .unwrap();
    assert_eq!(empty.value, VerdictValue::Unknown);
}
