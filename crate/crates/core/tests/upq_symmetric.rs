mod common;

use common::{binomial, h, r, random_pattern, rng};
use fences::patterns::{fence_walk, replay_walk, ChainLabel};
use fences::translation::{can_translate_down, can_translate_up};
use fences::upq_symmetric::{
    disc_upq_sym_enumerate, ell_values, in_d_gt, infl_char_upq, kappa_from_pattern, min_ktype_upq,
    pattern_from_kappa, period_criterion, rank_condition, seed_250128, theorem_chain,
    upq_sym_multiplicity, z_vector, KWeight, UpqSymContext,
};
use fences::{
    enumerate_strict, fences as fences_of, Error, Label, Rational, TheoremTag, VerdictValue,
};
use rand::Rng;
use std::collections::HashSet;

fn pat(s: &str) -> fences::InterleavingPattern {
    s.parse().unwrap()
}

#[test]
fn kappa_bijection() {
    for rr in 0..=4 {
        for ss in 0..=4 {
            let all = enumerate_strict(rr, ss);
            assert_eq!(all.len(), binomial(rr + ss, rr));
            let mut seen = HashSet::new();
            for d in all {
                let kappa = kappa_from_pattern(&d).unwrap();
                assert_eq!((kappa.r(), kappa.s()), (rr, ss));
                assert_eq!(pattern_from_kappa(&kappa), d);
                assert!(seen.insert(kappa.to_string()));
            }
        }
    }
    assert_eq!(
        kappa_from_pattern(&pat("x1 > y1")).unwrap().to_string(),
        "{(1),(1),1}"
    );
    assert_eq!(
        kappa_from_pattern(&pat("y1 > x1")).unwrap().abbreviated(),
        "{(0),(1),1}"
    );
}

#[test]
fn ell_values_recount() {
    let mut g = rng(17);
    for _ in 0..500 {
        let (rr, ss) = (g.gen_range(0..=5), g.gen_range(0..=5));
        let d = random_pattern(&mut g, rr, ss);
        let word = d.word();
        // second pass: count labels strictly above each position directly
        let above = |pos: usize| {
            let xs = word[..pos].iter().filter(|l| l.is_x()).count() as i64;
            xs - (pos as i64 - xs)
        };
        let mut want = vec![0i64; rr + ss];
        for (pos, l) in word.iter().enumerate() {
            match *l {
                Label::X(i) => want[i - 1] = above(pos),
                Label::Y(j) => want[rr + j - 1] = above(pos),
            }
        }
        assert_eq!(ell_values(&d), want, "{d}");
    }
    assert_eq!(
        ell_values(&pat("x1 > y1 > y2 > x2 > x3")),
        vec![0, -1, 0, 1, 0]
    );
    assert_eq!(
        ell_values(&pat("x1 > x2 > x3 > y1 > y2")),
        vec![0, 1, 2, 3, 2]
    );
    assert_eq!(ell_values(&pat("y1 > y2 > y3")), vec![0, -1, -2]);
}

#[test]
fn rank_and_z_vectors() {
    assert!(rank_condition(1, 1, 2, 1));
    assert!(!rank_condition(1, 0, 0, 1));
    assert!(rank_condition(0, 0, 4, 3));
    let ctx = UpqSymContext::new(3, 2, 1, 1, pat("x1 > y1")).unwrap();
    assert_eq!(
        z_vector(&ctx, &[r(2)], &[r(1)]).unwrap(),
        vec![r(2), r(0), r(-2), r(1), r(-1)]
    );
    assert!(matches!(
        z_vector(&ctx, &[r(1)], &[r(1)]),
        Err(Error::Domain(_))
    ));
    let empty = UpqSymContext::new(3, 2, 0, 0, pat("")).unwrap();
    assert_eq!(z_vector(&empty, &[], &[]).unwrap(), vec![r(0); 5]);
    assert!(UpqSymContext::new(3, 2, 2, 1, pat("x1 > y1 > x2")).is_err());
}

/// A random `(x, y; xi, eta)` on the theorem chain for `ctx` with every entry above its `Q`.
fn random_chain_point<R: Rng>(
    g: &mut R,
    ctx: &UpqSymContext,
) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let chain = theorem_chain(&kappa_from_pattern(&ctx.d).unwrap());
    let (eps, eps2) = (ctx.lattice(), ctx.lattice() - Rational::HALF);
    let (mut x, mut y) = (vec![Rational::ZERO; ctx.r], vec![Rational::ZERO; ctx.s]);
    let (mut xi, mut eta) = (vec![Rational::ZERO; ctx.r], vec![Rational::ZERO; ctx.s]);
    let mut prev = ctx.q_value();
    for label in chain.labels.iter().rev().skip(1) {
        let off = match label {
            ChainLabel::X(_) | ChainLabel::Y(_) => eps,
            ChainLabel::Xi(_) | ChainLabel::Eta(_) => eps2,
        };
        let v = off.smallest_above(prev) + r(g.gen_range(0..3));
        match *label {
            ChainLabel::X(i) => x[i - 1] = v,
            ChainLabel::Y(j) => y[j - 1] = v,
            ChainLabel::Xi(i) => xi[i - 1] = v,
            ChainLabel::Eta(j) => eta[j - 1] = v,
        }
        prev = v;
    }
    (x, y, xi, eta)
}

fn random_context<R: Rng>(g: &mut R) -> UpqSymContext {
    let p = g.gen_range(1..=7);
    let q = g.gen_range(0..=6);
    let rr = g.gen_range(0..=(p - 1) / 2);
    let ss = g.gen_range(0..=q / 2);
    UpqSymContext::new(p, q, rr, ss, random_pattern(g, rr, ss)).unwrap()
}

#[test]
fn minimal_k_types_are_antisymmetric() {
    let mut g = rng(19);
    for _ in 0..500 {
        let ctx = random_context(&mut g);
        let (x, y, _, _) = random_chain_point(&mut g, &ctx);
        let lambda: Vec<Rational> = x.iter().chain(&y).copied().collect();
        let mu = min_ktype_upq(&ctx, &lambda).unwrap();
        let (a, b) = mu.blocks();
        for i in 0..ctx.p {
            assert_eq!(a[i] + a[ctx.p - 1 - i], Rational::ZERO);
        }
        for j in 0..ctx.q {
            assert_eq!(b[j] + b[ctx.q - 1 - j], Rational::ZERO);
        }
        assert!(
            a.windows(2).all(|w| w[0] >= w[1]) && b.windows(2).all(|w| w[0] >= w[1]),
            "{mu:?}"
        );
    }
}

#[test]
fn small_example_infinitesimal_character() {
    for d in ["x1 > y1", "y1 > x1"] {
        let ctx = UpqSymContext::new(3, 2, 1, 1, pat(d)).unwrap();
        for a in 1..=7 {
            for b in 1..=7 {
                if a == b {
                    continue;
                }
                let lambda = [r(a), r(b)];
                if !in_d_gt(&ctx.d, &lambda, Rational::ZERO) {
                    continue;
                }
                let mut got = infl_char_upq(&ctx, &lambda).unwrap().entries().to_vec();
                let mut want = vec![r(a), r(0), r(-a), r(b), r(-b)];
                got.sort();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }
    let sub = UpqSymContext::new(2, 2, 1, 1, pat("x1 > y1")).unwrap();
    assert_eq!(
        infl_char_upq(&sub, &[h(5), h(3)]).unwrap().entries().len(),
        4
    );
}

#[test]
fn seed_transport_closure() {
    let mut g = rng(29);
    let mut ones = 0;
    for _ in 0..300 {
        let ctx = random_context(&mut g);
        let ctx2 = ctx.subgroup().unwrap();
        let (x, y, xi, eta) = random_chain_point(&mut g, &ctx);
        let lambda: Vec<Rational> = x.iter().chain(&y).copied().collect();
        let nu: Vec<Rational> = xi.iter().chain(&eta).copied().collect();
        let v = upq_sym_multiplicity(&ctx, &ctx2, &lambda, &nu).unwrap();
        assert_eq!(v.value, VerdictValue::One, "{:?} {lambda:?} {nu:?}", ctx);
        assert_eq!(*v.tags().last().unwrap(), TheoremTag::UpqSym);
        ones += 1;

        // the seed sits on the same chain and a fence walk reaches the target
        let sx: Vec<Rational> = xi.iter().map(|&a| a + Rational::HALF).collect();
        let sy: Vec<Rational> = eta.iter().map(|&a| a - Rational::HALF).collect();
        assert!(seed_250128(&sx, &sy, &xi, &eta).unwrap());
        let chain = theorem_chain(&kappa_from_pattern(&ctx.d).unwrap());
        assert!(chain.holds(&sx, &sy, &xi, &eta).unwrap());
        let tail = ctx.q_value() - Rational::ONE;
        let from = chain.point(&sx, &sy, tail, &xi, &eta).unwrap();
        let to = chain.point(&x, &y, tail, &xi, &eta).unwrap();
        let d = chain.to_pattern();
        let steps = fence_walk(&d, &from.y, &from.x, &to.x).unwrap();
        assert_eq!(replay_walk(&d, &from.y, &from.x, &steps).unwrap(), to.x);

        // the period condition holds at the seed whenever its K-type is defined
        let seed: Vec<Rational> = sx.iter().chain(&sy).copied().collect();
        if in_d_gt(&ctx.d, &seed, ctx.q_value()) {
            let mu = min_ktype_upq(&ctx, &seed).unwrap();
            let mu2 = min_ktype_upq(&ctx2, &nu).unwrap();
            assert!(
                period_criterion(&KWeight::U(mu), &KWeight::U(mu2))
                    .unwrap()
                    .contains
            );
        }
    }
    assert_eq!(ones, 300);
}

#[test]
fn mismatched_patterns_are_unknown() {
    let ctx = UpqSymContext::new(3, 2, 1, 1, pat("x1 > y1")).unwrap();
    let other = UpqSymContext::new(2, 2, 1, 1, pat("y1 > x1")).unwrap();
    let v = upq_sym_multiplicity(&ctx, &other, &[r(5), r(2)], &[h(7), h(5)]).unwrap();
    assert_eq!(v.value, VerdictValue::Unknown);
    let wrong = UpqSymContext::new(3, 2, 1, 1, pat("x1 > y1")).unwrap();
    assert!(matches!(
        upq_sym_multiplicity(&ctx, &wrong, &[r(5), r(2)], &[h(7), h(5)]),
        Err(Error::Domain(_))
    ));
}

#[test]
fn enumeration_flags() {
    let all = disc_upq_sym_enumerate(3, 2, 1, 1, r(3)).unwrap();
    // lattice Z with entries in {1, 2, 3}: 3 * 2 ordered pairs split over both patterns
    assert_eq!(all.len(), 6);
    assert!(all.iter().all(|e| e.good_range != e.may_vanish));
    assert!(all.iter().all(|e| e.good_range));
    assert_eq!(disc_upq_sym_enumerate(3, 2, 0, 0, r(3)).unwrap().len(), 1);
    assert!(disc_upq_sym_enumerate(3, 2, 1, 1, r(0)).unwrap().is_empty());
    let big = disc_upq_sym_enumerate(6, 4, 2, 1, h(11)).unwrap();
    assert!(big.iter().any(|e| e.may_vanish) && big.iter().any(|e| e.good_range));
}

#[test]
fn fences_are_blocked_on_upq_lattices() {
    let mut g = rng(31);
    for _ in 0..500 {
        let ctx = random_context(&mut g);
        if ctx.r == 0 || ctx.s == 0 {
            continue;
        }
        let (x, _, _, eta) = random_chain_point(&mut g, &ctx);
        let (tau, nu) = (x, eta);
        let d = fences::classify(&fences::ParamPoint::new(tau.clone(), nu.clone())).unwrap();
        for f in fences_of(&d).unwrap() {
            let (i, j) = (f.x_index, f.y_index);
            // slide x_i next to y_j and try to step across
            let mut t = tau.clone();
            if t[i - 1] > nu[j - 1] {
                t[i - 1] = nu[j - 1] + Rational::HALF;
                assert!(!can_translate_down(&t, &nu, i).unwrap());
            } else {
                t[i - 1] = nu[j - 1] - Rational::HALF;
                assert!(!can_translate_up(&t, &nu, i).unwrap());
            }
        }
    }
}
