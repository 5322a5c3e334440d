//! Interleaving patterns of two decreasing chains `x` and `y`.

mod chain;
mod syntax;
mod walk;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{expect_len, Error, Result};
use crate::rational::{strictly_decreasing, weakly_decreasing, Rational};

pub use chain::{build_dd_plus, ChainLabel, MergedChain};
pub use syntax::{parse_chain, ChainToken};
pub use walk::{apply_steps, extremal_mu, fence_walk, fence_walk_via_extremal, replay_walk};

/// One entry of a pattern word; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    X(usize),
    Y(usize),
}

impl Label {
    pub fn is_x(self) -> bool {
        matches!(self, Label::X(_))
    }

    pub fn index(self) -> usize {
        match self {
            Label::X(i) | Label::Y(i) => i,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::X(i) => write!(f, "x{i}"),
            Label::Y(j) => write!(f, "y{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Strict,
    WeakGE,
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Strict => ">",
            Relation::WeakGE => ">=",
            Relation::Equal => "=",
        }
    }

    pub fn holds(self, a: Rational, b: Rational) -> bool {
        match self {
            Relation::Strict => a > b,
            Relation::WeakGE => a >= b,
            Relation::Equal => a == b,
        }
    }
}

/// A total order on `x_1 > ... > x_n` and `y_1 > ... > y_m`, possibly with weak atoms.
///
/// Two patterns are equal exactly when their words and relation sequences are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterleavingPattern {
    n: usize,
    m: usize,
    word: Vec<Label>,
    rel: Vec<Relation>,
}

impl InterleavingPattern {
    /// Validates the label subsequences and the relation count.
    pub fn new(word: Vec<Label>, rel: Vec<Relation>) -> Result<Self> {
        let want = word.len().saturating_sub(1);
        if rel.len() != want {
            return Err(Error::shape(format!(
                "pattern of {} labels needs {want} relations, got {}",
                word.len(),
                rel.len()
            )));
        }
        let (mut n, mut m) = (0, 0);
        for &label in &word {
            let next = match label {
                Label::X(i) => {
                    n += 1;
                    (i, n)
                }
                Label::Y(j) => {
                    m += 1;
                    (j, m)
                }
            };
            if next.0 != next.1 {
                return Err(Error::domain(format!(
                    "label {label} out of order: chains must read x1, x2, ... and y1, y2, ..."
                )));
            }
        }
        Ok(InterleavingPattern { n, m, word, rel })
    }

    /// The strict pattern with the given word.
    pub fn strict(word: Vec<Label>) -> Result<Self> {
        let k = word.len().saturating_sub(1);
        Self::new(word, vec![Relation::Strict; k])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn word(&self) -> &[Label] {
        &self.word
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rel
    }

    pub fn is_strict(&self) -> bool {
        self.rel.iter().all(|&r| r == Relation::Strict)
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.word.iter().position(|&l| l == label)
    }

    /// The same word with every relation made strict.
    pub fn strictified(&self) -> Self {
        InterleavingPattern {
            rel: vec![Relation::Strict; self.rel.len()],
            ..self.clone()
        }
    }

    /// Replaces relation `k` (between word positions `k` and `k+1`).
    pub fn with_relation(&self, k: usize, r: Relation) -> Result<Self> {
        if k >= self.rel.len() {
            return Err(Error::shape(format!("relation index {k} out of range")));
        }
        let mut out = self.clone();
        out.rel[k] = r;
        Ok(out)
    }

    pub(crate) fn require_strict(&self, op: &str) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{op} is defined only for strict patterns"
            )))
        }
    }

    pub(crate) fn value(&self, label: Label, p: &ParamPoint) -> Rational {
        match label {
            Label::X(i) => p.x[i - 1],
            Label::Y(j) => p.y[j - 1],
        }
    }
}

impl fmt::Display for InterleavingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, label) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", self.rel[k - 1].symbol())?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// A pair of exact-rational vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamPoint {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl ParamPoint {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Self {
        ParamPoint { x, y }
    }
}

/// The hyperplane `x_i = y_j` for an adjacent pair in a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fence {
    #[serde(rename = "xIndex")]
    pub x_index: usize,
    #[serde(rename = "yIndex")]
    pub y_index: usize,
}

/// The move `sign * f_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    pub sign: i8,
}

impl Step {
    pub fn up(index: usize) -> Self {
        Step { index, sign: 1 }
    }

    pub fn down(index: usize) -> Self {
        Step { index, sign: -1 }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{s}f{}", self.index)
    }
}

/// The pattern realized by `p`, with `=` atoms exactly where values coincide.
pub fn classify(p: &ParamPoint) -> Result<InterleavingPattern> {
    if !strictly_decreasing(&p.x) {
        return Err(Error::domain("x is not strictly decreasing"));
    }
    if !weakly_decreasing(&p.y) {
        return Err(Error::domain("y is not weakly decreasing"));
    }
    let (n, m) = (p.x.len(), p.y.len());
    let mut word = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        // Ties put the x label first.
        if j == m || (i < n && p.x[i] >= p.y[j]) {
            i += 1;
            word.push(Label::X(i));
        } else {
            j += 1;
            word.push(Label::Y(j));
        }
    }
    let values: Vec<Rational> = word
        .iter()
        .map(|&l| match l {
            Label::X(i) => p.x[i - 1],
            Label::Y(j) => p.y[j - 1],
        })
        .collect();
    let rel = values
        .windows(2)
        .map(|w| {
            if w[0] == w[1] {
                Relation::Equal
            } else {
                Relation::Strict
            }
        })
        .collect();
    InterleavingPattern::new(word, rel)
}

/// True iff every adjacent relation of `d` holds at `p`.
pub fn satisfies(d: &InterleavingPattern, p: &ParamPoint) -> Result<bool> {
    expect_len("x", p.x.len(), d.n)?;
    expect_len("y", p.y.len(), d.m)?;
    Ok(d.word
        .windows(2)
        .zip(&d.rel)
        .all(|(w, r)| r.holds(d.value(w[0], p), d.value(w[1], p))))
}

/// All strict patterns on `(n, m)` in lexicographic word order.
pub fn enumerate_strict(n: usize, m: usize) -> Vec<InterleavingPattern> {
    fn go(
        n: usize,
        m: usize,
        i: usize,
        j: usize,
        word: &mut Vec<Label>,
        out: &mut Vec<Vec<Label>>,
    ) {
        if i == n && j == m {
            out.push(word.clone());
            return;
        }
        if i < n {
            word.push(Label::X(i + 1));
            go(n, m, i + 1, j, word, out);
            word.pop();
        }
        if j < m {
            word.push(Label::Y(j + 1));
            go(n, m, i, j + 1, word, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    go(n, m, 0, 0, &mut Vec::with_capacity(n + m), &mut words);
    words
        .into_iter()
        .map(|w| InterleavingPattern::strict(w).expect("generated words are valid"))
        .collect()
}

/// All adjacent x/y pairs of a strict pattern, in word order.
pub fn fences(d: &InterleavingPattern) -> Result<Vec<Fence>> {
    d.require_strict("fences")?;
    Ok(d.word
        .windows(2)
        .filter_map(|w| match (w[0], w[1]) {
            (Label::X(i), Label::Y(j)) | (Label::Y(j), Label::X(i)) => Some(Fence {
                x_index: i,
                y_index: j,
            }),
            _ => None,
        })
        .collect())
}

/// The number of x labels above `y_1` (all of them when `m = 0`).
pub fn m_of(d: &InterleavingPattern) -> usize {
    d.word.iter().take_while(|l| l.is_x()).count()
}

/// True iff `x_i` and `x_{i+1}` are adjacent in the word.
pub fn adjacent_string(d: &InterleavingPattern, i: usize) -> Result<bool> {
    if i == 0 || i >= d.n {
        return Err(Error::shape(format!(
            "index {i} outside 1..={}",
            d.n.saturating_sub(1)
        )));
    }
    let a = d.position(Label::X(i)).expect("label present");
    Ok(d.word.get(a + 1) == Some(&Label::X(i + 1)))
}
