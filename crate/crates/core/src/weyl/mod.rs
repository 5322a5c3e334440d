//! Compact branching `U(n) -> U(n-1)`.

mod schur;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{classify, satisfies, InterleavingPattern, Label, ParamPoint};
use crate::rational::Rational;
use crate::translation::{Fact, GroupPair, ProvenanceStep, TheoremTag, Verdict};

pub use schur::{branch_oracle, schur_expand, SchurPolynomial, ORACLE_DIM_CAP};

/// A multiset of rationals, stored sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InfinitesimalCharacter(Vec<Rational>);

impl InfinitesimalCharacter {
    pub fn new(mut entries: Vec<Rational>) -> Self {
        entries.sort_by(|a, b| b.cmp(a));
        InfinitesimalCharacter(entries)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No repeated entries.
    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

/// Checks that `x` is weakly decreasing.
pub fn validate_highest_weight(x: &[i64]) -> Result<()> {
    match x.windows(2).position(|w| w[0] < w[1]) {
        None => Ok(()),
        Some(k) => Err(Error::domain(format!(
            "highest weight is not weakly decreasing at positions {} and {}",
            k + 1,
            k + 2
        ))),
    }
}

/// `((N-1)/2, (N-3)/2, ..., (1-N)/2)`.
pub fn rho(n: usize) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::shape("rho needs N >= 1"));
    }
    let n = n as i64;
    Ok((0..n).map(|k| Rational::new(n - 1 - 2 * k, 2)).collect())
}

/// `x + rho_N`, strictly decreasing.
pub fn infl_char(x: &[i64]) -> Result<Vec<Rational>> {
    validate_highest_weight(x)?;
    if x.is_empty() {
        return Ok(Vec::new());
    }
    Ok(x.iter().zip(rho(x.len())?).map(|(&a, r)| r + a).collect())
}

/// The strict interlacing pattern `x1 > y1 > x2 > ... > y_{n-1} > x_n`.
pub fn interlacing_pattern(n: usize) -> InterleavingPattern {
    let mut word = Vec::with_capacity(2 * n);
    for i in 1..=n {
        word.push(Label::X(i));
        if i < n {
            word.push(Label::Y(i));
        }
    }
    InterleavingPattern::strict(word).expect("interlacing word is valid")
}

fn weights_interlace(x: &[i64], y: &[i64]) -> bool {
    y.iter()
        .enumerate()
        .all(|(i, &b)| x[i] >= b && b >= x[i + 1])
}

/// Multiplicity of `V_y` in `V_x` restricted to `U(n-1)`.
///
/// Computed twice, from the highest weights and from the infinitesimal characters; the two are
/// asserted to agree.
pub fn weyl_mult(x: &[i64], y: &[i64]) -> Result<u8> {
    if x.is_empty() || y.len() + 1 != x.len() {
        return Err(Error::shape(format!(
            "weights of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    validate_highest_weight(x)?;
    validate_highest_weight(y)?;
    let by_weight = weights_interlace(x, y);
    let p = ParamPoint::new(infl_char(x)?, infl_char(y)?);
    let by_character = satisfies(&interlacing_pattern(x.len()), &p)?;
    if by_weight != by_character {
        return Err(Error::Internal(format!(
            "interlacing routes disagree for {x:?}, {y:?}"
        )));
    }
    Ok(u8::from(by_weight))
}

/// The branching fact for `(V_x, V_y)` stated on infinitesimal characters.
pub fn weyl_fact(x: &[i64], y: &[i64]) -> Result<Fact> {
    let mult = weyl_mult(x, y)?;
    let (xi, nu) = (infl_char(x)?, infl_char(y)?);
    let d = classify(&ParamPoint::new(xi.clone(), nu.clone()))?;
    let step = ProvenanceStep::new(
        TheoremTag::WeylLaw,
        format!(
            "{x:?} restricted to U({}) contains {y:?} {mult} time(s)",
            y.len()
        ),
    );
    let verdict = if mult == 1 {
        Verdict::one(step)
    } else {
        Verdict::zero(step)
    };
    Fact::new(GroupPair::compact(x.len() as u32), d, xi, nu, verdict)
}

/// `prod_{i<j} (x_i - x_j + j - i) / (j - i)`.
pub fn weyl_dim(x: &[i64]) -> Result<u64> {
    validate_highest_weight(x)?;
    let overflow = || Error::Capacity(format!("dimension of {x:?} overflows"));
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let gap = (j - i) as i128;
            num = num
                .checked_mul(i128::from(x[i]) - i128::from(x[j]) + gap)
                .ok_or_else(overflow)?;
            den = den.checked_mul(gap).ok_or_else(overflow)?;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if den != 1 {
        return Err(Error::Internal(format!("non-integral dimension for {x:?}")));
    }
    u64::try_from(num).map_err(|_| overflow())
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs().max(1)
}
