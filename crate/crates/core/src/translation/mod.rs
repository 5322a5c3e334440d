//! Translation legality, stability transport and the tau-invariant vanishing test.
//!
//! The engine manipulates facts about multiplicities, never representations.

mod facts;
mod verdict;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{adjacent_string, fence_walk, InterleavingPattern};
use crate::rational::{render_vector, Rational};

pub use facts::{Fact, FactStore, GroupPair};
pub use verdict::{ProvenanceStep, TheoremTag, Verdict, VerdictValue};

/// Simple roots `e_i - e_{i+1}` (by index `i`) at whose walls a coherent family vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauInvariantSet {
    pub n: usize,
    pub indices: BTreeSet<usize>,
}

impl TauInvariantSet {
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&i) = indices.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::shape(format!(
                "simple root index {i} outside 1..{n}"
            )));
        }
        Ok(TauInvariantSet { n, indices })
    }

    /// All simple roots, as for a finite-dimensional module.
    pub fn full(n: usize) -> Self {
        TauInvariantSet {
            n,
            indices: (1..n).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        TauInvariantSet {
            n,
            indices: BTreeSet::new(),
        }
    }
}

fn check_index(tau: &[Rational], i: usize) -> Result<()> {
    if i == 0 || i > tau.len() {
        Err(Error::shape(format!(
            "coordinate {i} outside 1..={}",
            tau.len()
        )))
    } else {
        Ok(())
    }
}

/// Whether the move `tau -> tau + f_i` transports both vanishing and non-vanishing.
pub fn can_translate_up(tau: &[Rational], tau_small: &[Rational], i: usize) -> Result<bool> {
    check_index(tau, i)?;
    Ok(!tau_small.iter().any(|&t| tau[i - 1] == t - Rational::HALF))
}

/// Whether the move `tau -> tau - f_i` transports both vanishing and non-vanishing.
pub fn can_translate_down(tau: &[Rational], tau_small: &[Rational], i: usize) -> Result<bool> {
    check_index(tau, i)?;
    Ok(!tau_small.iter().any(|&t| tau[i - 1] == t + Rational::HALF))
}

/// Carries the seed's verdict to `lambda` along a walk that stays inside the seed's pattern.
pub fn stability_transport(seed: &Fact, lambda: &[Rational]) -> Result<Verdict> {
    if seed.verdict == VerdictValue::Unknown {
        return Err(Error::domain("seed verdict is Unknown"));
    }
    if !seed.eigenspace_ok {
        return Err(Error::domain(
            "seed family does not satisfy the eigenspace hypothesis",
        ));
    }
    let xi = &seed.lambda;
    if let Some(k) = xi.windows(2).position(|w| w[0] - w[1] < Rational::ONE) {
        return Err(Error::domain(format!(
            "seed is not regular: xi_{} - xi_{} < 1 in {}",
            k + 1,
            k + 2,
            render_vector(xi)
        )));
    }
    let steps = fence_walk(&seed.pattern, &seed.nu, xi, lambda)?;
    let mut cur = xi.clone();
    for (k, s) in steps.iter().enumerate() {
        let ok = if s.sign > 0 {
            can_translate_up(&cur, &seed.nu, s.index)?
        } else {
            can_translate_down(&cur, &seed.nu, s.index)?
        };
        if !ok {
            return Err(Error::Internal(format!(
                "walk step {k} ({s}) from {} is not a legal translation",
                render_vector(&cur)
            )));
        }
        cur[s.index - 1] += Rational::int(i64::from(s.sign));
    }
    let value = match seed.verdict {
        VerdictValue::NonZero if seed.group_pair.is_multiplicity_free() => VerdictValue::One,
        v => v,
    };
    let mut provenance = seed.provenance.clone();
    provenance.push(ProvenanceStep {
        tag: TheoremTag::Stability,
        detail: format!(
            "{} -> {} within {}",
            render_vector(xi),
            render_vector(lambda),
            seed.pattern
        ),
        walk: Some(steps),
    });
    Ok(Verdict::new(value, provenance))
}

/// Zero when some simple root of the tau-invariant joins two adjacent x labels of `d`.
pub fn tau_vanish(tau_set: &TauInvariantSet, d: &InterleavingPattern) -> Result<Verdict> {
    d.require_strict("tau_vanish")?;
    if tau_set.n != d.n() {
        return Err(Error::shape(format!(
            "tau-invariant on {} coordinates, pattern has {}",
            tau_set.n,
            d.n()
        )));
    }
    for &i in &tau_set.indices {
        if adjacent_string(d, i)? {
            return Ok(Verdict::zero(ProvenanceStep::new(
                TheoremTag::TauVanish,
                format!("x{} > x{} adjacent in {d}", i, i + 1),
            )));
        }
    }
    Ok(Verdict::unknown())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::enumerate_strict;
    use crate::rational::ints;

    fn h(n: i64) -> Rational {
        Rational::new(n, 2)
    }

    #[test]
    fn legality_examples() {
        let tau = ints(&[2, 0, -1]);
        let small = [h(1), h(-1)];
        assert!(!can_translate_up(&tau, &small, 2).unwrap());
        assert!(can_translate_up(&tau, &small, 1).unwrap());
        assert!(can_translate_down(&tau, &small, 3).unwrap());
        assert!(!can_translate_down(&tau, &small, 2).unwrap());
        assert!(can_translate_up(&ints(&[4]), &[], 1).unwrap());
        assert!(can_translate_down(&ints(&[4]), &[], 1).unwrap());
        assert!(matches!(
            can_translate_up(&tau, &small, 4),
            Err(Error::Shape(_))
        ));
    }

    fn weyl_seed() -> Fact {
        let v = Verdict::one(ProvenanceStep::new(TheoremTag::WeylLaw, "(1,0,0) > (0,0)"));
        Fact::new(
            GroupPair::compact(3),
            "x1 > y1 > x2 > y2 > x3".parse().unwrap(),
            ints(&[2, 0, -1]),
            vec![h(1), h(-1)],
            v,
        )
        .unwrap()
    }

    #[test]
    fn transport_inside_fences() {
        let seed = weyl_seed();
        let v = stability_transport(&seed, &ints(&[5, 0, -1])).unwrap();
        assert_eq!(v.value, VerdictValue::One);
        assert_eq!(v.tags(), vec![TheoremTag::WeylLaw, TheoremTag::Stability]);
        assert_eq!(v.provenance[1].walk.as_ref().unwrap().len(), 3);
        let same = stability_transport(&seed, &seed.lambda).unwrap();
        assert_eq!(same.value, VerdictValue::One);
        assert!(matches!(
            stability_transport(&seed, &ints(&[5, 1, -1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn transport_promotes_nonzero_on_multiplicity_free_pairs() {
        let mut seed = weyl_seed();
        seed.verdict = VerdictValue::NonZero;
        assert_eq!(
            stability_transport(&seed, &ints(&[3, 0, -2]))
                .unwrap()
                .value,
            VerdictValue::One
        );
    }

    #[test]
    fn transport_rejects_bad_seeds() {
        let mut seed = weyl_seed();
        seed.verdict = VerdictValue::Unknown;
        assert!(matches!(
            stability_transport(&seed, &ints(&[3, 0, -1])),
            Err(Error::Domain(_))
        ));
        let mut seed = weyl_seed();
        seed.eigenspace_ok = false;
        assert!(matches!(
            stability_transport(&seed, &ints(&[3, 0, -1])),
            Err(Error::Domain(_))
        ));
        let v = Verdict::one(ProvenanceStep::new(TheoremTag::WeylLaw, "close"));
        let close = Fact::new(
            GroupPair::compact(2),
            "x1 > y1 > x2".parse().unwrap(),
            vec![h(1), h(0)],
            vec![h(1) / 2],
            v,
        )
        .unwrap();
        assert!(matches!(
            stability_transport(&close, &[h(3), h(0)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn vanishing_examples() {
        let full = TauInvariantSet::full(3);
        let v = tau_vanish(&full, &"x1 > y1 > x2 > x3 > y2".parse().unwrap()).unwrap();
        assert_eq!(v.value, VerdictValue::Zero);
        let interlacing: InterleavingPattern = "x1 > y1 > x2 > y2 > x3".parse().unwrap();
        for d in enumerate_strict(3, 2) {
            assert_eq!(
                tau_vanish(&TauInvariantSet::empty(3), &d).unwrap().value,
                VerdictValue::Unknown
            );
        }
        assert_eq!(
            tau_vanish(&TauInvariantSet::new(3, [1]).unwrap(), &interlacing)
                .unwrap()
                .value,
            VerdictValue::Unknown
        );
        assert!(TauInvariantSet::new(3, [3]).is_err());
    }
}
