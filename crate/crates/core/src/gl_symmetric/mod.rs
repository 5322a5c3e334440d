//! `GL(n,R)` families: Weyl's labels for `O(N)`, the parameters of `Pi_l(lambda)`,
//! discrete series of `GL(p+q,R)/(GL(p,R) x GL(q,R))` and the branching region
//! obtained by jumping fences. The Speh checker lives in [`speh`].

mod speh;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{expect_len, Error, Result};
use crate::patterns::{classify, ParamPoint};
use crate::rational::{ints, render_vector, Rational};
use crate::translation::{
    Fact, FactStore, GroupPair, ProvenanceStep, TheoremTag, Verdict, VerdictValue,
};
use crate::weyl::InfinitesimalCharacter;

pub use speh::{speh_check, speh_hypotheses, speh_pattern, speh_seed, EpsConvention, SpehParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylOType {
    I,
    II,
}

/// An element of `Lambda^+(O(N))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylOLabel {
    #[serde(rename = "N")]
    n: usize,
    entries: Vec<i64>,
    #[serde(rename = "type")]
    kind: WeylOType,
    k: usize,
}

impl WeylOLabel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn kind(&self) -> WeylOType {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl fmt::Display for WeylOLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

fn positive_head(v: &[i64]) -> bool {
    v.iter().all(|&a| a > 0) && v.windows(2).all(|w| w[0] >= w[1])
}

/// Classifies a label as Type I or Type II. When `N = 2k` the two shapes coincide
/// and Type I is reported.
pub fn validate_weyl_o(n: usize, entries: &[i64]) -> Result<WeylOLabel> {
    expect_len("O(N) label", entries.len(), n)?;
    let zeros = entries.iter().rev().take_while(|&&a| a == 0).count();
    let k = n - zeros;
    let label = |kind, k| WeylOLabel {
        n,
        entries: entries.to_vec(),
        kind,
        k,
    };
    if 2 * k <= n && positive_head(&entries[..k]) {
        return Ok(label(WeylOType::I, k));
    }
    // Type II has exactly k trailing zeros after a block of N - 2k ones.
    let k = zeros;
    if 2 * k <= n && positive_head(&entries[..k]) && entries[k..n - k].iter().all(|&a| a == 1) {
        return Ok(label(WeylOType::II, k));
    }
    Err(Error::domain(format!(
        "({}) is neither of Type I nor of Type II for O({n})",
        entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )))
}

/// Parameter `lambda` of `Pi_l(lambda)` for `GL(n,R)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiEllParam {
    pub n: usize,
    pub ell: usize,
    pub lambda: Vec<i64>,
}

impl PiEllParam {
    pub fn new(n: usize, ell: usize, lambda: &[i64]) -> Result<Self> {
        if 2 * ell > n {
            return Err(Error::domain(format!("2l = {} exceeds n = {n}", 2 * ell)));
        }
        expect_len("lambda", lambda.len(), ell)?;
        if !strict_above(lambda, 0) {
            return Err(Error::domain(format!(
                "lambda = ({}) must be strictly decreasing and positive",
                join(lambda)
            )));
        }
        Ok(PiEllParam {
            n,
            ell,
            lambda: lambda.to_vec(),
        })
    }
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `v_1 > ... > v_r > bound`.
fn strict_above(v: &[i64], bound: i64) -> bool {
    v.windows(2).all(|w| w[0] > w[1]) && v.last().is_none_or(|&a| a > bound)
}

fn all_odd(v: &[i64]) -> bool {
    v.iter().all(|a| a.rem_euclid(2) == 1)
}

/// `(lambda, n-2l-1, n-2l-3, ..., 1+2l-n, -lambda) / 2`.
pub fn infl_char_pi_ell(n: usize, ell: usize, lambda: &[i64]) -> Result<InfinitesimalCharacter> {
    PiEllParam::new(n, ell, lambda)?;
    let mid = (n - 2 * ell) as i64;
    let mut entries: Vec<Rational> = lambda.iter().map(|&a| Rational::new(a, 2)).collect();
    entries.extend((0..mid).map(|j| Rational::new(mid - 1 - 2 * j, 2)));
    entries.extend(lambda.iter().map(|&a| Rational::new(-a, 2)));
    Ok(InfinitesimalCharacter::new(entries))
}

/// The minimal `K`-type together with its behaviour under `SO(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinKType {
    pub label: WeylOLabel,
    pub splits: bool,
    #[serde(rename = "soHighestWeights")]
    pub so_highest_weights: Vec<Vec<i64>>,
}

pub fn min_ktype_pi_ell(n: usize, ell: usize, lambda: &[i64]) -> Result<MinKType> {
    PiEllParam::new(n, ell, lambda)?;
    let mut entries: Vec<i64> = lambda.iter().map(|a| a + 1).collect();
    entries.resize(n, 0);
    let label = validate_weyl_o(n, &entries)
        .map_err(|e| Error::Internal(format!("minimal K-type failed to classify: {e}")))?;
    let mut head: Vec<i64> = lambda.iter().map(|a| a + 1).collect();
    let splits = n == 2 * ell && ell > 0;
    let so_highest_weights = if splits {
        let mut other = head.clone();
        let last = other.len() - 1;
        other[last] = -other[last];
        vec![head, other]
    } else {
        head.resize(n / 2, 0);
        vec![head]
    };
    Ok(MinKType {
        label,
        splits,
        so_highest_weights,
    })
}

pub fn good_range(n: usize, ell: usize, lambda: &[i64]) -> bool {
    lambda.len() == ell && strict_above(lambda, (n as i64 - 2 * ell as i64 - 1).max(0))
}

pub fn sgood(n: usize, ell: usize, k: usize, lambda: &[i64]) -> bool {
    let n = n as i64;
    let bound = (n - 2 * ell as i64 - 1).max(n - 2 * k as i64 - 3).max(0);
    lambda.len() == ell && strict_above(lambda, bound)
}

pub fn nugood(n: usize, k: usize, nu: &[i64]) -> bool {
    nu.len() == k && strict_above(nu, (n as i64 - 2 * k as i64 - 2).max(0))
}

/// Membership of `Pi_l(lambda)` in `Disc(GL(p+q,R)/(GL(p,R) x GL(q,R)))`.
pub fn disc_gh_gl_validate(p: usize, q: usize, lambda: &[i64]) -> bool {
    lambda.len() == p.min(q) && all_odd(lambda) && strict_above(lambda, 0)
}

/// Membership of an `O(p+q)`-label in `Disc(O(p+q)/(O(p) x O(q)))`.
pub fn disc_compact_validate(p: usize, q: usize, mu: &[i64]) -> bool {
    let ell = p.min(q);
    mu.len() == p + q
        && mu.iter().all(|a| a.rem_euclid(2) == 0 && *a >= 0)
        && mu[..ell].windows(2).all(|w| w[0] >= w[1])
        && mu[ell..].iter().all(|&a| a == 0)
}

/// `lambda_1 = nu_1 > ... > lambda_l = nu_l > 0`.
pub fn gl_seed_condition(lambda: &[i64], nu: &[i64]) -> Result<bool> {
    expect_len("nu", nu.len(), lambda.len())?;
    Ok(lambda == nu && strict_above(lambda, 0))
}

pub fn gl_multiplicity(n: usize, ell: usize, lambda: &[i64], nu: &[i64]) -> Result<Verdict> {
    if 2 * ell >= n {
        return Err(Error::domain(format!(
            "the region needs 2l < n, got l = {ell}, n = {n}"
        )));
    }
    expect_len("lambda", lambda.len(), ell)?;
    expect_len("nu", nu.len(), ell)?;
    let bound = (n - 2 * ell - 1) as i64;
    if all_odd(lambda) && all_odd(nu) && strict_above(lambda, bound) && strict_above(nu, bound) {
        return Ok(Verdict::one(ProvenanceStep::new(
            TheoremTag::GlRegion,
            format!(
                "lambda = ({}), nu = ({}) odd with last entries > {bound}",
                join(lambda),
                join(nu)
            ),
        )));
    }
    if all_odd(lambda) && gl_seed_condition(lambda, nu)? {
        return Ok(Verdict::one(ProvenanceStep::new(
            TheoremTag::SeedPeriod,
            format!(
                "lambda = nu = ({}) meets the period condition",
                join(lambda)
            ),
        )));
    }
    Ok(Verdict::unknown())
}

/// The family string shared by `GL(n,R) > GL(n-1,R)` facts about `(Pi_l, pi_k)`.
pub fn gl_family(ell: usize, k: usize) -> String {
    format!("ell={ell};k={k}")
}

/// A fact about `[Pi_l(lambda)| : pi_k(nu)]` on `GL(n,R) > GL(n-1,R)`.
pub fn gl_fact(
    n: usize,
    ell: usize,
    k: usize,
    lambda: &[i64],
    nu: &[i64],
    verdict: Verdict,
) -> Result<Fact> {
    PiEllParam::new(n, ell, lambda)?;
    if n == 0 || 2 * k > n - 1 {
        return Err(Error::domain(format!("2k = {} exceeds n - 1", 2 * k)));
    }
    expect_len("nu", nu.len(), k)?;
    let (x, y) = (ints(lambda), ints(nu));
    let d = classify(&ParamPoint::new(x.clone(), y.clone()))?;
    Ok(
        Fact::new(GroupPair::general_linear(n as u32), d, x, y, verdict)?
            .with_family(gl_family(ell, k)),
    )
}

/// Constancy in `lambda` over the `sgood` odd range of the nonvanishing of
/// `Hom(Pi_l(lambda)|, pi_k(nu))`, read off any seed in the store.
pub fn gl_jump_transport(
    n: usize,
    ell: usize,
    k: usize,
    nu: &[i64],
    store: &FactStore,
) -> Result<Verdict> {
    if 2 * ell > n || n == 0 || 2 * k > n - 1 {
        return Err(Error::domain(format!(
            "need 2l <= n and 2k <= n - 1, got l = {ell}, k = {k}, n = {n}"
        )));
    }
    expect_len("nu", nu.len(), k)?;
    if !all_odd(nu) || !nugood(n, k, nu) {
        return Err(Error::domain(format!(
            "nu = ({}) must be odd with nu_1 > ... > nu_k > {}",
            join(nu),
            (n as i64 - 2 * k as i64 - 2).max(0)
        )));
    }
    let pair = GroupPair::general_linear(n as u32);
    let family = gl_family(ell, k);
    let target = ints(nu);
    let admissible = |f: &Fact| -> bool {
        let lam: Option<Vec<i64>> = f.lambda.iter().map(|a| a.to_integer()).collect();
        f.group_pair == pair
            && f.family.as_deref() == Some(family.as_str())
            && f.nu == target
            && lam.is_some_and(|l| all_odd(&l) && sgood(n, ell, k, &l))
    };
    let matching: Vec<&Fact> = store.find(admissible).collect();
    let nonzero = matching.iter().find(|f| f.verdict.is_nonzero());
    let zero = matching.iter().find(|f| f.verdict == VerdictValue::Zero);
    let (seed, value) = match (nonzero, zero) {
        (Some(a), Some(b)) => {
            return Err(Error::Consistency(format!(
                "store has {} at lambda = ({}) and Zero at lambda = ({}) for nu = ({})",
                a.verdict,
                render_vector(&a.lambda),
                render_vector(&b.lambda),
                join(nu)
            )))
        }
        (Some(a), None) => (a, VerdictValue::NonZero),
        (None, Some(b)) => (b, VerdictValue::Zero),
        (None, None) => return Ok(Verdict::unknown()),
    };
    let mut provenance = seed.provenance.clone();
    provenance.push(ProvenanceStep::new(
        TheoremTag::JumpFences,
        format!(
            "{family}, nu = ({}) from lambda = ({}) to every odd sgood lambda",
            join(nu),
            render_vector(&seed.lambda)
        ),
    ));
    Ok(Verdict::new(value, provenance))
}

/// [`gl_jump_transport`] evaluated at a specific odd `sgood` target `lambda`.
pub fn gl_jump_at(
    n: usize,
    ell: usize,
    k: usize,
    lambda: &[i64],
    nu: &[i64],
    store: &FactStore,
) -> Result<Verdict> {
    expect_len("lambda", lambda.len(), ell)?;
    if !all_odd(lambda) || !sgood(n, ell, k, lambda) {
        return Err(Error::domain(format!(
            "lambda = ({}) must be odd and in the strengthened good range",
            join(lambda)
        )));
    }
    gl_jump_transport(n, ell, k, nu, store)
}
