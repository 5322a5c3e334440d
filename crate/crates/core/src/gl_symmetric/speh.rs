//! Branching of Speh representations of `GL(2m,R)` to `GL(2m-1,R)`.

use serde::{Deserialize, Serialize};

use crate::error::{expect_len, Error, Result};
use crate::patterns::{satisfies, InterleavingPattern, Label, ParamPoint};
use crate::rational::{render_vector, strictly_decreasing, Rational};
use crate::translation::{ProvenanceStep, TheoremTag, Verdict};

/// How the parity tag `eps` is written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EpsConvention {
    /// `eps` in `{0, 1/2}` is the lattice offset of `lambda`.
    #[default]
    Half,
    /// `eps` in `{0, 1}`; the lattice of `lambda` is then `Z`.
    Integral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpehParams {
    pub m: usize,
    pub eps: Rational,
    #[serde(default)]
    pub convention: EpsConvention,
    pub lambda: Vec<Rational>,
    pub nu_prime: Vec<Rational>,
    pub nu_m: Rational,
    pub nu_second: Vec<Rational>,
    pub kappa: u8,
}

impl SpehParams {
    /// The lattice offset of `lambda`, if `eps` is legal under the convention.
    pub fn offset(&self) -> Option<Rational> {
        match self.convention {
            EpsConvention::Half if self.eps == Rational::ZERO || self.eps == Rational::HALF => {
                Some(self.eps)
            }
            EpsConvention::Integral if self.eps == Rational::ZERO || self.eps == Rational::ONE => {
                Some(Rational::ZERO)
            }
            _ => None,
        }
    }

    /// `nu' ++ nu''`, the entries that appear in the interleaving display.
    pub fn outer_nu(&self) -> Vec<Rational> {
        self.nu_prime
            .iter()
            .chain(&self.nu_second)
            .copied()
            .collect()
    }

    fn check_shape(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::shape("m must be positive"));
        }
        expect_len("lambda", self.lambda.len(), 2 * self.m)?;
        expect_len("nu'", self.nu_prime.len(), self.m - 1)?;
        expect_len("nu''", self.nu_second.len(), self.m - 1)
    }
}

/// `lambda_1 > nu_1 > lambda_2 > ... > nu_{m-1} > lambda_m > lambda_{m+1} > nu_{m+1} > ... > nu_{2m-1} > lambda_{2m}`
/// on the `(2m, 2m-2)` pattern whose `y` are `nu' ++ nu''`.
pub fn speh_pattern(m: usize) -> Result<InterleavingPattern> {
    if m == 0 {
        return Err(Error::shape("m must be positive"));
    }
    let mut word = Vec::with_capacity(4 * m - 2);
    for i in 1..m {
        word.push(Label::X(i));
        word.push(Label::Y(i));
    }
    word.push(Label::X(m));
    word.push(Label::X(m + 1));
    for j in m..2 * m - 1 {
        word.push(Label::Y(j));
        word.push(Label::X(j + 2));
    }
    InterleavingPattern::strict(word)
}

/// Each hypothesis with whether it holds, in a fixed order.
pub fn speh_hypotheses(params: &SpehParams) -> Result<Vec<(&'static str, bool)>> {
    params.check_shape()?;
    let m = params.m;
    let offset = params.offset();
    let in_lattice =
        |v: &[Rational], o: Rational| v.iter().all(|a| a.in_coset(o)) && strictly_decreasing(v);
    let lambda_ok = offset.is_some_and(|o| in_lattice(&params.lambda, o));
    let nu_ok = offset.is_some_and(|o| {
        let o = o + Rational::HALF;
        in_lattice(&params.nu_prime, o) && in_lattice(&params.nu_second, o)
    }) && params.nu_m.is_integer();
    let (chain_ok, gap_ok) = match (params.nu_prime.last(), params.nu_second.first()) {
        (Some(&a), Some(&b)) => (a > params.nu_m && params.nu_m > b, a - b != Rational::ONE),
        _ => (true, true),
    };
    let point = ParamPoint::new(params.lambda.clone(), params.outer_nu());
    let pattern_ok = satisfies(&speh_pattern(m)?, &point)?;
    let kappa_ok = params.kappa <= 1
        && params.nu_m.is_integer()
        && (params.nu_m + params.eps * 2 + Rational::int(params.kappa as i64 + m as i64 - 1))
            .to_integer()
            .is_some_and(|s| s.rem_euclid(2) == 0);
    Ok(vec![
        ("eps", offset.is_some()),
        ("lambda lattice", lambda_ok),
        ("nu lattice", nu_ok),
        ("nu chain", chain_ok),
        ("nu gap", gap_ok),
        ("interleaving", pattern_ok),
        ("kappa parity", kappa_ok),
    ])
}

/// `One` when every hypothesis holds, otherwise `Unknown`.
pub fn speh_check(params: &SpehParams) -> Result<Verdict> {
    let hyps = speh_hypotheses(params)?;
    if hyps.iter().all(|&(_, ok)| ok) {
        Ok(Verdict::one(ProvenanceStep::new(
            TheoremTag::Speh,
            format!(
                "m = {}, lambda = ({}), nu = ({}; {}; {}), kappa = {}",
                params.m,
                render_vector(&params.lambda),
                render_vector(&params.nu_prime),
                params.nu_m,
                render_vector(&params.nu_second),
                params.kappa
            ),
        )))
    } else {
        Ok(Verdict::unknown())
    }
}

/// The `nu` adjacent to `lambda` with `nu_m = lambda_1 + lambda_{2m}`.
pub fn speh_seed(lambda: &[Rational], convention: EpsConvention) -> Result<SpehParams> {
    if lambda.is_empty() || !lambda.len().is_multiple_of(2) {
        return Err(Error::shape(format!(
            "lambda needs a positive even length, got {}",
            lambda.len()
        )));
    }
    let m = lambda.len() / 2;
    let frac = lambda[0] - Rational::int(lambda[0].floor());
    let eps = match (convention, frac) {
        (_, f) if f.is_zero() => Rational::ZERO,
        (EpsConvention::Half, f) if f == Rational::HALF => Rational::HALF,
        _ => {
            return Err(Error::domain(format!(
                "lambda_1 = {} is off the allowed lattices",
                lambda[0]
            )))
        }
    };
    if !lambda.iter().all(|a| a.in_coset(eps)) || !strictly_decreasing(lambda) {
        return Err(Error::domain(format!(
            "lambda = ({}) must be strictly decreasing in Z + {eps}",
            render_vector(lambda)
        )));
    }
    let nu_prime: Vec<Rational> = (1..m).map(|i| lambda[i] + Rational::HALF).collect();
    let nu_second: Vec<Rational> = (m + 1..2 * m)
        .map(|i| lambda[i - 1] - Rational::HALF)
        .collect();
    let nu_m = lambda[0] + lambda[2 * m - 1];
    if let (Some(&a), Some(&b)) = (nu_prime.last(), nu_second.first()) {
        if !(a > nu_m && nu_m > b) || a - b == Rational::ONE {
            return Err(Error::domain(format!(
                "nu_(m-1) = {a}, nu_m = {nu_m}, nu_(m+1) = {b} violate the chain hypotheses"
            )));
        }
    }
    let parity = (nu_m + eps * 2 + Rational::int(m as i64 - 1))
        .to_integer()
        .ok_or_else(|| Error::Internal(format!("nu_m = {nu_m} is not integral")))?;
    let params = SpehParams {
        m,
        eps,
        convention,
        lambda: lambda.to_vec(),
        nu_prime,
        nu_m,
        nu_second,
        kappa: parity.rem_euclid(2) as u8,
    };
    let failed: Vec<&str> = speh_hypotheses(&params)?
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect();
    if !failed.is_empty() {
        return Err(Error::Internal(format!(
            "seed fails: {}",
            failed.join(", ")
        )));
    }
    Ok(params)
}
