//! The four-chain order `[D D' +]` on `(x, y; xi, eta)` plus a trailing `x_{r+1}`.

use std::fmt;

use super::{InterleavingPattern, Label, ParamPoint};
use crate::error::{Error, Result};
use crate::rational::{strictly_decreasing, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainLabel {
    X(usize),
    Y(usize),
    Xi(usize),
    Eta(usize),
}

impl ChainLabel {
    fn on_lambda_side(self) -> bool {
        matches!(self, ChainLabel::X(_) | ChainLabel::Y(_))
    }
}

impl fmt::Display for ChainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainLabel::X(i) => write!(f, "x{i}"),
            ChainLabel::Y(j) => write!(f, "y{j}"),
            ChainLabel::Xi(i) => write!(f, "ξ{i}"),
            ChainLabel::Eta(j) => write!(f, "η{j}"),
        }
    }
}

/// A strict total order on `x_1..x_{r+1}, y_1..y_s, xi_1..xi_r, eta_1..eta_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedChain {
    pub r: usize,
    pub s: usize,
    pub labels: Vec<ChainLabel>,
}

impl MergedChain {
    /// The chain as a two-chain pattern: the lambda side `(x, y, x_{r+1})` against `(xi, eta)`.
    pub fn to_pattern(&self) -> InterleavingPattern {
        let (mut a, mut b) = (0, 0);
        let word = self
            .labels
            .iter()
            .map(|l| {
                if l.on_lambda_side() {
                    a += 1;
                    Label::X(a)
                } else {
                    b += 1;
                    Label::Y(b)
                }
            })
            .collect();
        InterleavingPattern::strict(word).expect("ranks are consecutive")
    }

    fn value(
        &self,
        l: ChainLabel,
        x: &[Rational],
        y: &[Rational],
        tail: Rational,
        xi: &[Rational],
        eta: &[Rational],
    ) -> Rational {
        match l {
            ChainLabel::X(i) if i == self.r + 1 => tail,
            ChainLabel::X(i) => x[i - 1],
            ChainLabel::Y(j) => y[j - 1],
            ChainLabel::Xi(i) => xi[i - 1],
            ChainLabel::Eta(j) => eta[j - 1],
        }
    }

    fn check_shapes(
        &self,
        x: &[Rational],
        y: &[Rational],
        xi: &[Rational],
        eta: &[Rational],
    ) -> Result<()> {
        if x.len() != self.r || xi.len() != self.r || y.len() != self.s || eta.len() != self.s {
            return Err(Error::shape(format!(
                "chain on (r,s)=({},{}) got x:{} y:{} xi:{} eta:{}",
                self.r,
                self.s,
                x.len(),
                y.len(),
                xi.len(),
                eta.len()
            )));
        }
        Ok(())
    }

    /// The point of [`Self::to_pattern`]'s region corresponding to the given values.
    pub fn point(
        &self,
        x: &[Rational],
        y: &[Rational],
        tail: Rational,
        xi: &[Rational],
        eta: &[Rational],
    ) -> Result<ParamPoint> {
        self.check_shapes(x, y, xi, eta)?;
        let mut lam = Vec::new();
        let mut nu = Vec::new();
        for &l in &self.labels {
            let v = self.value(l, x, y, tail, xi, eta);
            if l.on_lambda_side() {
                lam.push(v);
            } else {
                nu.push(v);
            }
        }
        Ok(ParamPoint::new(lam, nu))
    }

    /// True iff the chain holds, ignoring the trailing `x_{r+1}`.
    pub fn holds(
        &self,
        x: &[Rational],
        y: &[Rational],
        xi: &[Rational],
        eta: &[Rational],
    ) -> Result<bool> {
        self.check_shapes(x, y, xi, eta)?;
        let values: Vec<Rational> = self
            .labels
            .iter()
            .filter(|l| **l != ChainLabel::X(self.r + 1))
            .map(|&l| self.value(l, x, y, Rational::ZERO, xi, eta))
            .collect();
        Ok(strictly_decreasing(&values))
    }
}

impl fmt::Display for MergedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" > "))
    }
}

/// Merges the order `d` on `(x, y)` with `d2` on `(xi, eta)` so that `x_i > xi_i` and
/// `eta_j > y_j` sit next to each other, then appends `x_{r+1}` at the bottom.
pub fn build_dd_plus(d: &InterleavingPattern, d2: &InterleavingPattern) -> Result<MergedChain> {
    if (d.n(), d.m()) != (d2.n(), d2.m()) {
        return Err(Error::shape(format!(
            "patterns on ({},{}) and ({},{})",
            d.n(),
            d.m(),
            d2.n(),
            d2.m()
        )));
    }
    d.require_strict("build_dd_plus")?;
    d2.require_strict("build_dd_plus")?;
    let lam: Vec<ChainLabel> = d
        .word()
        .iter()
        .map(|l| match *l {
            Label::X(i) => ChainLabel::X(i),
            Label::Y(j) => ChainLabel::Y(j),
        })
        .collect();
    let nu: Vec<ChainLabel> = d2
        .word()
        .iter()
        .map(|l| match *l {
            Label::X(i) => ChainLabel::Xi(i),
            Label::Y(j) => ChainLabel::Eta(j),
        })
        .collect();
    let (mut a, mut b) = (0, 0);
    let mut labels = Vec::with_capacity(lam.len() + nu.len() + 1);
    let mut x_emitted = 0;
    while a < lam.len() || b < nu.len() {
        let take_nu = match nu.get(b) {
            Some(ChainLabel::Xi(i)) => *i <= x_emitted,
            Some(ChainLabel::Eta(j)) => lam.get(a) == Some(&ChainLabel::Y(*j)),
            _ => false,
        } || a == lam.len();
        if take_nu {
            labels.push(nu[b]);
            b += 1;
        } else {
            if let ChainLabel::X(i) = lam[a] {
                x_emitted = i;
            }
            labels.push(lam[a]);
            a += 1;
        }
    }
    labels.push(ChainLabel::X(d.n() + 1));
    Ok(MergedChain {
        r: d.n(),
        s: d.m(),
        labels,
    })
}
