//! Discrete series of `U(p,q)`: Harish-Chandra parameters, their `(lambda+, w)` split,
//! pattern-constancy transport, the holomorphic seed, and the `U(2,1)` table.

mod u21;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{expect_len, Error, Result};
use crate::patterns::{classify, satisfies, InterleavingPattern, ParamPoint};
use crate::rational::{render_vector, strictly_decreasing, Rational};
use crate::translation::{
    Fact, FactStore, GroupPair, ProvenanceStep, TheoremTag, Verdict, VerdictValue,
};

pub use u21::{
    u21_audit, u21_cases, u21_limit_query, u21_query, Chamber, U21AuditRow, U21Case, U21Label,
    U21Word,
};

/// The lattice offset `(p+q-1)/2` of `U(p,q)` Harish-Chandra parameters.
pub fn epsilon(p: usize, q: usize) -> Rational {
    Rational::new(p as i64 + q as i64 - 1, 2)
}

fn check_lattice(name: &str, v: &[Rational], offset: Rational) -> Result<()> {
    match v.iter().position(|a| !a.in_coset(offset)) {
        None => Ok(()),
        Some(k) => Err(Error::domain(format!(
            "{name}_{} = {} is not in Z + {offset}",
            k + 1,
            v[k]
        ))),
    }
}

/// A validated element of `(Z_eps)^{p,q}_>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCParam {
    pub p: usize,
    pub q: usize,
    pub entries: Vec<Rational>,
}

pub fn validate_hc(p: usize, q: usize, entries: &[Rational]) -> Result<HCParam> {
    if p + q == 0 {
        return Err(Error::shape("p + q must be positive"));
    }
    expect_len("Harish-Chandra parameter", entries.len(), p + q)?;
    check_lattice("lambda", entries, epsilon(p, q))?;
    if !strictly_decreasing(&entries[..p]) {
        return Err(Error::domain(
            "the first p entries are not strictly decreasing",
        ));
    }
    if !strictly_decreasing(&entries[p..]) {
        return Err(Error::domain(
            "the last q entries are not strictly decreasing",
        ));
    }
    let mut sorted = entries.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("entries repeat (parameter is singular)"));
    }
    Ok(HCParam {
        p,
        q,
        entries: entries.to_vec(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A shuffle of `p` pluses and `q` minuses, modelling a minimal coset representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleWord(pub Vec<Sign>);

impl ShuffleWord {
    pub fn p(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Plus).count()
    }

    pub fn q(&self) -> usize {
        self.0.len() - self.p()
    }

    /// All shuffles for `(p, q)`, pluses first in lexicographic order.
    pub fn all(p: usize, q: usize) -> Vec<ShuffleWord> {
        fn go(p: usize, q: usize, cur: &mut Vec<Sign>, out: &mut Vec<ShuffleWord>) {
            if p == 0 && q == 0 {
                out.push(ShuffleWord(cur.clone()));
                return;
            }
            for (s, ok) in [(Sign::Plus, p > 0), (Sign::Minus, q > 0)] {
                if ok {
                    cur.push(s);
                    let (p2, q2) = if s == Sign::Plus {
                        (p - 1, q)
                    } else {
                        (p, q - 1)
                    };
                    go(p2, q2, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(p, q, &mut Vec::new(), &mut out);
        out
    }

    /// `sigma` with `lambda_k = lambda+_{sigma(k)}` (0-based), so the source positions of the
    /// first `p` coordinates come first, then those of the last `q`.
    pub fn permutation(&self) -> Vec<usize> {
        let plus = (0..self.0.len()).filter(|&k| self.0[k] == Sign::Plus);
        let minus = (0..self.0.len()).filter(|&k| self.0[k] == Sign::Minus);
        plus.chain(minus).collect()
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for ShuffleWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' | '⊕' => Ok(Sign::Plus),
                '-' | '⊖' | '−' => Ok(Sign::Minus),
                _ => Err(Error::parse(format!("not a shuffle word: {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ShuffleWord)
    }
}

impl Serialize for ShuffleWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ShuffleWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSLabel {
    #[serde(rename = "lambdaPlus")]
    pub lambda_plus: Vec<Rational>,
    pub w: ShuffleWord,
}

/// Sorts the parameter and records which block each entry came from.
pub fn split(lambda: &HCParam) -> DSLabel {
    let mut tagged: Vec<(Rational, Sign)> = lambda
        .entries
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            (
                v,
                if k < lambda.p {
                    Sign::Plus
                } else {
                    Sign::Minus
                },
            )
        })
        .collect();
    tagged.sort_by_key(|t| std::cmp::Reverse(t.0));
    DSLabel {
        lambda_plus: tagged.iter().map(|t| t.0).collect(),
        w: ShuffleWord(tagged.iter().map(|t| t.1).collect()),
    }
}

/// The inverse of [`split`].
pub fn merge(label: &DSLabel) -> Result<HCParam> {
    expect_len("lambda+", label.lambda_plus.len(), label.w.0.len())?;
    let entries: Vec<Rational> = label
        .w
        .permutation()
        .into_iter()
        .map(|k| label.lambda_plus[k])
        .collect();
    validate_hc(label.w.p(), label.w.q(), &entries)
}

/// The store key for a pair of shuffle words.
pub fn ggp_family(w: &ShuffleWord, w2: &ShuffleWord) -> String {
    format!("w={w};w'={w2}")
}

fn check_d_int(
    p: usize,
    q: usize,
    d: &InterleavingPattern,
    lp: &[Rational],
    np: &[Rational],
) -> Result<()> {
    if p == 0 {
        return Err(Error::shape("the subgroup U(p-1,q) needs p >= 1"));
    }
    expect_len("lambda+", lp.len(), p + q)?;
    expect_len("nu+", np.len(), p + q - 1)?;
    check_lattice("lambda+", lp, epsilon(p, q))?;
    check_lattice("nu+", np, Rational::new(p as i64 + q as i64 - 2, 2))?;
    if !satisfies(d, &ParamPoint::new(lp.to_vec(), np.to_vec()))? {
        return Err(Error::domain(format!(
            "({}; {}) does not satisfy {d}",
            render_vector(lp),
            render_vector(np)
        )));
    }
    Ok(())
}

/// A Harish-Chandra-parameter fact for `(Pi^w(lambda+), pi^{w'}(nu+))`.
pub fn ggp_fact(
    p: usize,
    q: usize,
    w: &ShuffleWord,
    w2: &ShuffleWord,
    lambda_plus: &[Rational],
    nu_plus: &[Rational],
    verdict: Verdict,
) -> Result<Fact> {
    let d = classify(&ParamPoint::new(lambda_plus.to_vec(), nu_plus.to_vec()))?;
    check_d_int(p, q, &d, lambda_plus, nu_plus)?;
    Ok(Fact::new(
        GroupPair::indefinite(p as u32, q as u32),
        d,
        lambda_plus.to_vec(),
        nu_plus.to_vec(),
        verdict,
    )?
    .with_family(ggp_family(w, w2)))
}

/// Constancy of `[Pi^w(lambda+)|: pi^{w'}(nu+)]` over the lattice points of one pattern.
#[allow(clippy::too_many_arguments)]
pub fn ggp_transport(
    p: usize,
    q: usize,
    w: &ShuffleWord,
    w2: &ShuffleWord,
    d: &InterleavingPattern,
    store: &FactStore,
    lambda_plus: &[Rational],
    nu_plus: &[Rational],
) -> Result<Verdict> {
    check_d_int(p, q, d, lambda_plus, nu_plus)?;
    let pair = GroupPair::indefinite(p as u32, q as u32);
    let family = ggp_family(w, w2);
    let matching: Vec<&Fact> = store
        .find(|f| {
            f.group_pair == pair && &f.pattern == d && f.family.as_deref() == Some(family.as_str())
        })
        .collect();
    let nonzero = matching.iter().find(|f| f.verdict.is_nonzero());
    let zero = matching.iter().find(|f| f.verdict == VerdictValue::Zero);
    let (seed, value) = match (nonzero, zero) {
        (Some(a), Some(b)) => {
            return Err(Error::Consistency(format!(
                "store has both {} at {} and Zero at {} for {family} on {d}",
                a.verdict,
                render_vector(&a.lambda),
                render_vector(&b.lambda)
            )))
        }
        (Some(a), None) => (a, VerdictValue::NonZero),
        (None, Some(b)) => (b, VerdictValue::Zero),
        (None, None) => return Ok(Verdict::unknown()),
    };
    let mut provenance = seed.provenance.clone();
    provenance.push(ProvenanceStep::new(
        TheoremTag::Ggp,
        format!(
            "{family} on {d} from ({}; {})",
            render_vector(&seed.lambda),
            render_vector(&seed.nu)
        ),
    ));
    Ok(Verdict::new(value, provenance))
}

/// A holomorphic discrete series pair placed in the bottom layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoloSeed {
    /// In Harish-Chandra order: the first `p` coordinates, then the last `q`.
    pub lambda: Vec<Rational>,
    #[serde(rename = "lambdaPlus")]
    pub lambda_plus: Vec<Rational>,
    #[serde(rename = "nuPlus")]
    pub nu_plus: Vec<Rational>,
    pub pattern: InterleavingPattern,
}

/// Builds `lambda~` for `nu` (length `p+q-1`, chamber `nu_p > .. > nu_{p+q-1} > nu_1 > .. > nu_{p-1}`).
///
/// `lambda~_{p+j} = nu_{p+j-1} - 1/2`; each remaining slot takes the smallest lattice value
/// above its lower neighbour, except `lambda~_p`, which sits just below `nu_{p-1}`.
pub fn holo_seed(nu: &[Rational], p: usize, q: usize) -> Result<HoloSeed> {
    if p == 0 {
        return Err(Error::shape("holo_seed needs p >= 1"));
    }
    expect_len("nu", nu.len(), p + q - 1)?;
    check_lattice("nu", nu, Rational::new(p as i64 + q as i64 - 2, 2))?;
    let chamber: Vec<Rational> = nu[p - 1..].iter().chain(&nu[..p - 1]).copied().collect();
    if !strictly_decreasing(&chamber) {
        return Err(Error::domain(format!(
            "nu = {} is outside the holomorphic chamber",
            render_vector(nu)
        )));
    }
    let half = Rational::HALF;
    let mut lambda = vec![Rational::ZERO; p + q];
    for j in 1..=q {
        lambda[p + j - 1] = nu[p + j - 2] - half;
    }
    // lambda~_i sits in (nu_i, nu_{i-1}); lambda~_1 is also below lambda~_{p+q}.
    for i in 1..p {
        lambda[i - 1] = nu[i - 1] + half;
    }
    lambda[p - 1] = match p {
        1 if q > 0 => lambda[p + q - 1] - Rational::ONE,
        1 => epsilon(p, q),
        _ => nu[p - 2] - half,
    };
    if p >= 2 && q > 0 && lambda[0] >= lambda[p + q - 1] {
        return Err(Error::domain(format!(
            "no lattice point for lambda~_1 between nu_1 = {} and lambda~_{} = {}",
            nu[0],
            p + q,
            lambda[p + q - 1]
        )));
    }
    let mut lambda_plus: Vec<Rational> = lambda[p..].iter().chain(&lambda[..p]).copied().collect();
    if !strictly_decreasing(&lambda_plus) {
        lambda_plus.sort_by(|a, b| b.cmp(a));
    }
    let point = ParamPoint::new(lambda_plus.clone(), chamber.clone());
    let pattern = classify(&point)?;
    validate_hc(p, q, &lambda)?;
    if !pattern.is_strict() || !satisfies(&pattern, &point)? {
        return Err(Error::Internal(format!(
            "holomorphic seed {} is not strictly interlaced",
            render_vector(&lambda)
        )));
    }
    Ok(HoloSeed {
        lambda,
        lambda_plus,
        nu_plus: chamber,
        pattern,
    })
}
