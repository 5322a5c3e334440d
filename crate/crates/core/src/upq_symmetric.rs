//! Discrete series for `U(p,q)/(U(r,s) x U(p-r,q-s))` and their branching to `U(p-1,q)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{expect_len, Error, Result};
use crate::gl_symmetric::WeylOLabel;
use crate::patterns::{
    enumerate_strict, satisfies, ChainLabel, InterleavingPattern, Label, MergedChain, ParamPoint,
};
use crate::rational::{render_vector, strictly_decreasing, Rational};
use crate::translation::{
    stability_transport, Fact, GroupPair, ProvenanceStep, TheoremTag, Verdict,
};
use crate::weyl::InfinitesimalCharacter;

/// `min(p1,p2) + min(q1,q2) = min(p1+q1, p2+q2)`.
pub fn rank_condition(p1: usize, q1: usize, p2: usize, q2: usize) -> bool {
    p1.min(p2) + q1.min(q2) == (p1 + q1).min(p2 + q2)
}

/// The block data `{(r_j), (s_j), M}` of an interleaving pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaData {
    #[serde(rename = "r")]
    r_list: Vec<usize>,
    #[serde(rename = "s")]
    s_list: Vec<usize>,
}

impl ThetaData {
    /// Requires `0 <= r_1 < ... < r_M` and `0 < s_1 < ... < s_{M-1} <= s_M`, except that
    /// `s_1 = 0` is accepted for `M = 1` (no `y` at all).
    pub fn new(r_list: Vec<usize>, s_list: Vec<usize>) -> Result<Self> {
        let m = r_list.len();
        if m == 0 || s_list.len() != m {
            return Err(Error::domain(format!(
                "need M >= 1 and equal lengths, got {} and {}",
                m,
                s_list.len()
            )));
        }
        let r_ok = r_list.windows(2).all(|w| w[0] < w[1]);
        let s_ok = s_list[..m - 1].windows(2).all(|w| w[0] < w[1])
            && (m < 2 || s_list[m - 2] <= s_list[m - 1])
            && (s_list[0] > 0 || m == 1);
        if !r_ok || !s_ok {
            return Err(Error::domain(format!(
                "{:?}, {:?} violate the block inequalities",
                r_list, s_list
            )));
        }
        Ok(ThetaData { r_list, s_list })
    }

    pub fn m(&self) -> usize {
        self.r_list.len()
    }

    pub fn r(&self) -> usize {
        *self.r_list.last().expect("M >= 1")
    }

    pub fn s(&self) -> usize {
        *self.s_list.last().expect("M >= 1")
    }

    pub fn r_list(&self) -> &[usize] {
        &self.r_list
    }

    pub fn s_list(&self) -> &[usize] {
        &self.s_list
    }

    /// Drops a final `x` block that is followed by an empty `y` block, as in `{(0),(1),1}` for `y > x`.
    pub fn abbreviated(&self) -> String {
        let m = self.m();
        let keep = if m >= 2 && self.s_list[m - 2] == self.s_list[m - 1] {
            m - 1
        } else {
            m
        };
        render_blocks(&self.r_list[..keep], &self.s_list[..keep])
    }

    /// `(x or y) labels` in display order.
    fn blocks(
        &self,
    ) -> impl Iterator<Item = (std::ops::Range<usize>, std::ops::Range<usize>)> + '_ {
        (0..self.m()).map(move |j| {
            let (r0, s0) = if j == 0 {
                (0, 0)
            } else {
                (self.r_list[j - 1], self.s_list[j - 1])
            };
            (r0 + 1..self.r_list[j] + 1, s0 + 1..self.s_list[j] + 1)
        })
    }
}

fn render_blocks(r: &[usize], s: &[usize]) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{{({}),({}),{}}}", join(r), join(s), r.len())
}

impl fmt::Display for ThetaData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_blocks(&self.r_list, &self.s_list))
    }
}

pub fn kappa_from_pattern(d: &InterleavingPattern) -> Result<ThetaData> {
    d.require_strict("kappa_from_pattern")?;
    let (mut r_list, mut s_list) = (Vec::new(), Vec::new());
    let (mut r, mut s) = (0, 0);
    let word = d.word();
    for (k, l) in word.iter().enumerate() {
        match l {
            Label::X(_) => r += 1,
            Label::Y(_) => s += 1,
        }
        // A block pair closes where a y run meets the next x.
        let closes = match word.get(k + 1) {
            Some(next) => !l.is_x() && next.is_x(),
            None => true,
        };
        if closes {
            r_list.push(r);
            s_list.push(s);
        }
    }
    if r_list.is_empty() {
        r_list.push(0);
        s_list.push(0);
    }
    ThetaData::new(r_list, s_list)
}

pub fn pattern_from_kappa(kappa: &ThetaData) -> InterleavingPattern {
    let mut word = Vec::new();
    for (xs, ys) in kappa.blocks() {
        word.extend(xs.map(Label::X));
        word.extend(ys.map(Label::Y));
    }
    InterleavingPattern::strict(word).expect("blocks are consecutive")
}

/// The chain `x_i > xi_i` inside x blocks and `eta_j > y_j` inside y blocks, followed by `x_{r+1}`.
pub fn theorem_chain(kappa: &ThetaData) -> MergedChain {
    let mut labels = Vec::new();
    for (xs, ys) in kappa.blocks() {
        for i in xs {
            labels.extend([ChainLabel::X(i), ChainLabel::Xi(i)]);
        }
        for j in ys {
            labels.extend([ChainLabel::Eta(j), ChainLabel::Y(j)]);
        }
    }
    labels.push(ChainLabel::X(kappa.r() + 1));
    MergedChain {
        r: kappa.r(),
        s: kappa.s(),
        labels,
    }
}

/// `(p, q, r, s)` with a pattern `D` on `(r, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpqSymContext {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub d: InterleavingPattern,
}

impl UpqSymContext {
    pub fn new(p: usize, q: usize, r: usize, s: usize, d: InterleavingPattern) -> Result<Self> {
        if 2 * r > p || 2 * s > q {
            return Err(Error::domain(format!(
                "need 2r <= p and 2s <= q, got (p,q,r,s) = ({p},{q},{r},{s})"
            )));
        }
        if (d.n(), d.m()) != (r, s) {
            return Err(Error::domain(format!(
                "pattern {d} is not on (r,s) = ({r},{s})"
            )));
        }
        d.require_strict("UpqSymContext")?;
        Ok(UpqSymContext { p, q, r, s, d })
    }

    /// `Q = (p+q-1)/2 - r - s`.
    pub fn q_value(&self) -> Rational {
        self.lattice() - Rational::int((self.r + self.s) as i64)
    }

    /// The offset `(p+q-1)/2` of the lattice of `lambda`.
    pub fn lattice(&self) -> Rational {
        Rational::new(self.p as i64 + self.q as i64 - 1, 2)
    }

    /// The same pattern on `U(p-1, q)`.
    pub fn subgroup(&self) -> Result<UpqSymContext> {
        if self.p == 0 {
            return Err(Error::domain("U(p-1,q) needs p >= 1"));
        }
        UpqSymContext::new(self.p - 1, self.q, self.r, self.s, self.d.clone())
    }

    fn split<'a>(&self, lambda: &'a [Rational]) -> Result<(&'a [Rational], &'a [Rational])> {
        if lambda.len() != self.r + self.s {
            return Err(Error::domain(format!(
                "parameter of length {} for (r,s) = ({},{})",
                lambda.len(),
                self.r,
                self.s
            )));
        }
        Ok(lambda.split_at(self.r))
    }
}

fn setting_ok(x: &[Rational], y: &[Rational]) -> bool {
    let positive = |v: &[Rational]| strictly_decreasing(v) && v.iter().all(Rational::is_positive);
    positive(x) && positive(y) && x.iter().all(|a| !y.contains(a))
}

/// `(x, 0^{p-2r}, -x reversed; y, 0^{q-2s}, -y reversed)`.
pub fn z_vector(ctx: &UpqSymContext, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    if x.len() != ctx.r || y.len() != ctx.s {
        return Err(Error::domain(format!(
            "x, y of lengths {}, {} for (r,s) = ({},{})",
            x.len(),
            y.len(),
            ctx.r,
            ctx.s
        )));
    }
    if !setting_ok(x, y) {
        return Err(Error::domain(format!(
            "x = ({}), y = ({}) must be positive, strictly decreasing and disjoint",
            render_vector(x),
            render_vector(y)
        )));
    }
    let block = |v: &[Rational], width: usize| {
        let mut out = v.to_vec();
        out.resize(width - v.len(), Rational::ZERO);
        out.extend(v.iter().rev().map(|&a| -a));
        out
    };
    let mut z = block(x, ctx.p);
    z.extend(block(y, ctx.q));
    Ok(z)
}

/// `l_i(D)`: the number of x above the i-th label minus the number of y above it,
/// listed for `x_1..x_r` and then `y_1..y_s`.
pub fn ell_values(d: &InterleavingPattern) -> Vec<i64> {
    let mut at = vec![0i64; d.n() + d.m()];
    let (mut xs, mut ys) = (0i64, 0i64);
    for l in d.word() {
        match *l {
            Label::X(i) => {
                at[i - 1] = xs - ys;
                xs += 1;
            }
            Label::Y(j) => {
                at[d.n() + j - 1] = xs - ys;
                ys += 1;
            }
        }
    }
    at
}

/// `(x, y) in D` with every entry `> a`.
pub fn in_d_gt(d: &InterleavingPattern, lambda: &[Rational], a: Rational) -> bool {
    if lambda.len() != d.n() + d.m() {
        return false;
    }
    let (x, y) = lambda.split_at(d.n());
    lambda.iter().all(|&v| v > a)
        && satisfies(d, &ParamPoint::new(x.to_vec(), y.to_vec())).unwrap_or(false)
}

/// A highest weight for `U(p) x U(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpqKType {
    pub p: usize,
    pub q: usize,
    pub entries: Vec<Rational>,
}

impl UpqKType {
    pub fn blocks(&self) -> (&[Rational], &[Rational]) {
        self.entries.split_at(self.p)
    }
}

fn lattice_ok(v: &[Rational], offset: Rational) -> bool {
    v.iter().all(|a| a.in_coset(offset))
}

/// The minimal `K`-type of `Pi_lambda`, defined for `lambda` in `D_{>Q}`.
pub fn min_ktype_upq(ctx: &UpqSymContext, lambda: &[Rational]) -> Result<UpqKType> {
    ctx.split(lambda)?;
    let qv = ctx.q_value();
    if !lattice_ok(lambda, ctx.lattice()) || !in_d_gt(&ctx.d, lambda, qv) {
        return Err(Error::Range(format!(
            "({}) is not a lattice point of {}_{{>{qv}}}",
            render_vector(lambda),
            ctx.d
        )));
    }
    let (p, q, r, s) = (ctx.p, ctx.q, ctx.r, ctx.s);
    let ell = ell_values(&ctx.d);
    let mut mu = vec![Rational::ZERO; p + q];
    let shift_x = Rational::new(q as i64 - p as i64 + 1, 2);
    let shift_y = Rational::new(p as i64 - q as i64 + 1, 2);
    for i in 0..r {
        let v = lambda[i] + shift_x + Rational::int(ell[i]);
        mu[i] = v;
        mu[p - 1 - i] = -v;
    }
    for j in 0..s {
        let v = lambda[r + j] + shift_y - Rational::int(ell[r + j]);
        mu[p + j] = v;
        mu[p + q - 1 - j] = -v;
    }
    Ok(UpqKType { p, q, entries: mu })
}

/// `(+-x, +-y) ++ (Q, Q-1, ..., -Q)`.
pub fn infl_char_upq(ctx: &UpqSymContext, lambda: &[Rational]) -> Result<InfinitesimalCharacter> {
    let (x, y) = ctx.split(lambda)?;
    z_vector(ctx, x, y)?;
    let qv = ctx.q_value();
    let width = ctx.p + ctx.q - 2 * (ctx.r + ctx.s);
    let mut entries: Vec<Rational> = lambda.iter().flat_map(|&a| [a, -a]).collect();
    entries.extend((0..width).map(|k| qv - Rational::int(k as i64)));
    Ok(InfinitesimalCharacter::new(entries))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiscEntry {
    pub pattern: InterleavingPattern,
    pub lambda: Vec<Rational>,
    pub good_range: bool,
    pub may_vanish: bool,
}

const ENUMERATION_CAP: u128 = 1_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `(D, lambda)` with `lambda in D_{>0}` on the lattice `Z + (p+q-1)/2` and entries `<= bound`.
pub fn disc_upq_sym_enumerate(
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    bound: Rational,
) -> Result<Vec<DiscEntry>> {
    if 2 * r > p || 2 * s > q {
        return Err(Error::domain(format!(
            "need 2r <= p and 2s <= q, got (p,q,r,s) = ({p},{q},{r},{s})"
        )));
    }
    let offset = Rational::new(p as i64 + q as i64 - 1, 2);
    let lowest = offset.smallest_above(Rational::ZERO);
    let mut values = Vec::new();
    let mut v = lowest;
    while v <= bound {
        values.push(v);
        v += Rational::ONE;
        if values.len() as u128 > ENUMERATION_CAP {
            return Err(Error::Capacity(format!(
                "more than {ENUMERATION_CAP} lattice values below {bound}"
            )));
        }
    }
    values.reverse();
    let k = r + s;
    let total =
        binomial(values.len() as u128, k as u128).saturating_mul(binomial(k as u128, r as u128));
    if total > ENUMERATION_CAP {
        return Err(Error::Capacity(format!(
            "{total} parameters exceed the cap {ENUMERATION_CAP}"
        )));
    }
    let qv = offset - Rational::int(k as i64);
    let mut out = Vec::new();
    let mut combos = Vec::new();
    choose(&values, k, &mut Vec::new(), &mut combos);
    for d in enumerate_strict(r, s) {
        for chain in &combos {
            let mut lambda = vec![Rational::ZERO; k];
            for (l, &val) in d.word().iter().zip(chain) {
                match *l {
                    Label::X(i) => lambda[i - 1] = val,
                    Label::Y(j) => lambda[r + j - 1] = val,
                }
            }
            let good = in_d_gt(&d, &lambda, qv);
            out.push(DiscEntry {
                pattern: d.clone(),
                lambda,
                good_range: good,
                may_vanish: !good,
            });
        }
    }
    Ok(out)
}

/// Decreasing `k`-subsets of the decreasing list `values`, in lexicographic order.
fn choose(values: &[Rational], k: usize, cur: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let need = k - cur.len();
    for i in 0..values.len() {
        if values.len() - i < need {
            break;
        }
        cur.push(values[i]);
        choose(&values[i + 1..], k, cur, out);
        cur.pop();
    }
}

/// `x_i = xi_i + 1/2` and `y_j = eta_j - 1/2`.
pub fn seed_250128(
    x: &[Rational],
    y: &[Rational],
    xi: &[Rational],
    eta: &[Rational],
) -> Result<bool> {
    expect_len("xi", xi.len(), x.len())?;
    expect_len("eta", eta.len(), y.len())?;
    Ok(x.iter().zip(xi).all(|(&a, &b)| a == b + Rational::HALF)
        && y.iter().zip(eta).all(|(&a, &b)| a == b - Rational::HALF))
}

pub fn upq_family(r: usize, s: usize) -> String {
    format!("upq-sym r={r};s={s}")
}

/// `dim Hom(Pi_lambda|, pi_nu) = 1` on the coherent chain, reached from the period seed
/// by a walk inside the fences.
pub fn upq_sym_multiplicity(
    ctx: &UpqSymContext,
    ctx2: &UpqSymContext,
    lambda: &[Rational],
    nu: &[Rational],
) -> Result<Verdict> {
    if ctx.p == 0 || (ctx2.p + 1, ctx2.q, ctx2.r, ctx2.s) != (ctx.p, ctx.q, ctx.r, ctx.s) {
        return Err(Error::domain(format!(
            "contexts ({},{},{},{}) and ({},{},{},{}) are not U(p,q) > U(p-1,q)",
            ctx.p, ctx.q, ctx.r, ctx.s, ctx2.p, ctx2.q, ctx2.r, ctx2.s
        )));
    }
    let (x, y) = ctx.split(lambda)?;
    let (xi, eta) = ctx2.split(nu)?;
    if ctx.d != ctx2.d {
        return Ok(Verdict::unknown());
    }
    let (qv, qv2) = (ctx.q_value(), ctx2.q_value());
    let kappa = kappa_from_pattern(&ctx.d)?;
    let chain = theorem_chain(&kappa);
    let holds = lattice_ok(lambda, qv)
        && lattice_ok(nu, qv2)
        && in_d_gt(&ctx.d, lambda, qv)
        && in_d_gt(&ctx2.d, nu, qv2)
        && chain.holds(x, y, xi, eta)?;
    if !holds {
        return Ok(Verdict::unknown());
    }
    let sx: Vec<Rational> = xi.iter().map(|&a| a + Rational::HALF).collect();
    let sy: Vec<Rational> = eta.iter().map(|&a| a - Rational::HALF).collect();
    let tail = qv - Rational::ONE;
    let pattern = chain.to_pattern();
    let seed_point = chain.point(&sx, &sy, tail, xi, eta)?;
    let target = chain.point(x, y, tail, xi, eta)?;
    let seed = Fact::new(
        GroupPair::indefinite(ctx.p as u32, ctx.q as u32),
        pattern,
        seed_point.x,
        seed_point.y,
        Verdict::one(ProvenanceStep::new(
            TheoremTag::SeedPeriod,
            format!(
                "x = ({}), y = ({}) shifted by 1/2 from nu",
                render_vector(&sx),
                render_vector(&sy)
            ),
        )),
    )?
    .with_family(upq_family(ctx.r, ctx.s));
    let mut verdict = stability_transport(&seed, &target.x)?;
    verdict.provenance.push(ProvenanceStep::new(
        TheoremTag::UpqSym,
        format!("kappa = {kappa} on {chain}"),
    ));
    Ok(verdict)
}

/// A highest weight for one of the supported compact pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum KWeight {
    O(WeylOLabel),
    U(UpqKType),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PeriodReport {
    pub contains: bool,
    /// The multiplicity-one clause holds for every supported pair.
    pub multiplicity_one: bool,
}

/// Whether the `K'`-type `mu2` meets the highest weight vector of `mu` in the closed
/// forms available for `(O(n), O(n-1))` and `(U(p) x U(q), U(p-1) x U(q))`.
pub fn period_criterion(mu: &KWeight, mu2: &KWeight) -> Result<PeriodReport> {
    let contains = match (mu, mu2) {
        (KWeight::O(a), KWeight::O(b)) if b.n() + 1 == a.n() => {
            let mut padded = b.entries().to_vec();
            padded.push(0);
            padded == a.entries()
        }
        (KWeight::U(a), KWeight::U(b)) if b.p + 1 == a.p && b.q == a.q => {
            let (ap, aq) = a.blocks();
            let (bp, bq) = b.blocks();
            aq == bq
                && ap.iter().position(|v| v.is_zero()).is_some_and(|k| {
                    let mut rest = ap.to_vec();
                    rest.remove(k);
                    rest == bp
                })
        }
        _ => {
            return Err(Error::Unsupported(
                "period criterion needs (O(n), O(n-1)) or (U(p) x U(q), U(p-1) x U(q))".into(),
            ))
        }
    };
    Ok(PeriodReport {
        contains,
        multiplicity_one: true,
    })
}

/// Characters `(x1, x2)` of the rank-one Levi with `x1, -x2 > xi`, reached from `x1 = -x2`.
pub fn stiefel_transport(
    p: usize,
    q: usize,
    x1: Rational,
    x2: Rational,
    xi: Rational,
) -> Result<Verdict> {
    if p < 3 {
        return Err(Error::domain(format!(
            "the rank-one family on both sides needs p >= 3, got {p}"
        )));
    }
    let eps = Rational::new(p as i64 + q as i64 - 1, 2);
    let eps2 = Rational::new(p as i64 + q as i64 - 2, 2);
    if !x1.in_coset(eps) || !x2.in_coset(eps) || !xi.in_coset(eps2) {
        return Err(Error::domain(format!(
            "x1 = {x1}, x2 = {x2} need Z + {eps} and xi = {xi} needs Z + {eps2}"
        )));
    }
    if !xi.is_positive() {
        return Err(Error::domain(format!("xi = {xi} must be positive")));
    }
    if !(x1 > xi && -x2 > xi) {
        return Ok(Verdict::unknown());
    }
    let x = xi + Rational::HALF;
    let mut provenance = vec![
        ProvenanceStep::new(TheoremTag::SeedPeriod, format!("x = {x} against xi = {xi}")),
        ProvenanceStep::new(
            TheoremTag::UpqSym,
            format!("rank one, x > xi on U({p},{q}) > U({},{q})", p - 1),
        ),
    ];
    if x1 + x2 != Rational::ZERO || x1 != x {
        provenance.push(ProvenanceStep::new(
            TheoremTag::Stiefel,
            format!("({x}, {}) -> ({x1}, {x2}) with x1, -x2 > {xi}", -x),
        ));
    }
    Ok(Verdict::new(
        crate::translation::VerdictValue::One,
        provenance,
    ))
}
