//! The pair `(U(2,1), U(1,1))`: He's table of non-vanishing patterns and its limits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ShuffleWord;
use crate::error::{Error, Result};
use crate::patterns::{
    classify, enumerate_strict, parse_chain, InterleavingPattern, Label, ParamPoint, Relation,
};
use crate::rational::Rational;
use crate::translation::{
    tau_vanish, ProvenanceStep, TauInvariantSet, TheoremTag, Verdict, VerdictValue,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum U21Label {
    X1,
    X2,
    Y,
    Xi,
    Eta,
}

impl U21Label {
    const ALL: [U21Label; 5] = [
        U21Label::X1,
        U21Label::X2,
        U21Label::Y,
        U21Label::Xi,
        U21Label::Eta,
    ];

    fn name(self) -> &'static str {
        match self {
            U21Label::X1 => "x1",
            U21Label::X2 => "x2",
            U21Label::Y => "y",
            U21Label::Xi => "xi",
            U21Label::Eta => "eta",
        }
    }

    fn from_name(s: &str) -> Option<U21Label> {
        Some(match s {
            "x1" => U21Label::X1,
            "x2" => U21Label::X2,
            "y" => U21Label::Y,
            "xi" | "ξ" => U21Label::Xi,
            "eta" | "η" => U21Label::Eta,
            _ => return None,
        })
    }

    fn on_big_group(self) -> bool {
        matches!(self, U21Label::X1 | U21Label::X2 | U21Label::Y)
    }
}

/// A total order of `x1, x2, y, xi, eta`. Labels inside a run of `=` are kept in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct U21Word {
    labels: Vec<U21Label>,
    rel: Vec<Relation>,
}

impl U21Word {
    pub fn new(mut labels: Vec<U21Label>, rel: Vec<Relation>) -> Result<Self> {
        if labels.len() != 5 || rel.len() != 4 {
            return Err(Error::shape(
                "a U(2,1) word orders exactly x1, x2, y, xi, eta",
            ));
        }
        let mut seen = labels.clone();
        seen.sort();
        if seen != U21Label::ALL {
            return Err(Error::domain(
                "each of x1, x2, y, xi, eta must appear exactly once",
            ));
        }
        let mut start = 0;
        for k in 0..=rel.len() {
            if k == rel.len() || rel[k] != Relation::Equal {
                labels[start..=k].sort();
                start = k + 1;
            }
        }
        let word = U21Word { labels, rel };
        let (a, b) = (word.pos(U21Label::X1), word.pos(U21Label::X2));
        if a > b || word.tied(a, b) {
            return Err(Error::domain("the word must have x1 > x2"));
        }
        Ok(word)
    }

    pub fn labels(&self) -> &[U21Label] {
        &self.labels
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rel
    }

    fn pos(&self, l: U21Label) -> usize {
        self.labels
            .iter()
            .position(|&m| m == l)
            .expect("every label present")
    }

    fn tied(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        a == b || self.rel[a..b].iter().all(|&r| r == Relation::Equal)
    }

    pub fn is_strict(&self) -> bool {
        self.rel.iter().all(|&r| r == Relation::Strict)
    }

    /// The order realized by concrete, pairwise distinct values.
    pub fn realized(
        x1: Rational,
        x2: Rational,
        y: Rational,
        xi: Rational,
        eta: Rational,
    ) -> Result<Self> {
        let mut tagged = [
            (x1, U21Label::X1),
            (x2, U21Label::X2),
            (y, U21Label::Y),
            (xi, U21Label::Xi),
            (eta, U21Label::Eta),
        ];
        tagged.sort_by_key(|t| std::cmp::Reverse(t.0));
        if tagged.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::domain("values are not pairwise distinct"));
        }
        U21Word::new(
            tagged.iter().map(|t| t.1).collect(),
            vec![Relation::Strict; 4],
        )
    }

    /// The chamber of `(x1, x2, y)`, read off the position of `y`.
    pub fn chamber(&self) -> Chamber {
        let y = self.pos(U21Label::Y);
        if y < self.pos(U21Label::X1) {
            Chamber::MinusPlusPlus
        } else if y < self.pos(U21Label::X2) {
            Chamber::PlusMinusPlus
        } else {
            Chamber::PlusPlusMinus
        }
    }

    /// `+-` when `xi > eta`, else `-+`.
    pub fn delta_prime(&self) -> ShuffleWord {
        let s = if self.pos(U21Label::Xi) < self.pos(U21Label::Eta) {
            "+-"
        } else {
            "-+"
        };
        s.parse().expect("valid shuffle")
    }

    /// The pattern of the sorted parameters `(lambda+, nu+)` on `(3, 2)`.
    pub fn pattern(&self) -> InterleavingPattern {
        let (mut a, mut b) = (0, 0);
        let word = self
            .labels
            .iter()
            .map(|l| {
                if l.on_big_group() {
                    a += 1;
                    Label::X(a)
                } else {
                    b += 1;
                    Label::Y(b)
                }
            })
            .collect();
        InterleavingPattern::new(word, self.rel.clone()).expect("ranks are consecutive")
    }
}

impl fmt::Display for U21Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.labels.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", self.rel[k - 1].symbol())?;
            }
            f.write_str(l.name())?;
        }
        Ok(())
    }
}

impl FromStr for U21Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (names, rel) = parse_chain(s)?;
        let labels = names
            .iter()
            .map(|n| {
                U21Label::from_name(n)
                    .ok_or_else(|| Error::parse(format!("unknown U(2,1) label {n:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        U21Word::new(labels, rel).map_err(|e| Error::parse(e.to_string()))
    }
}

impl Serialize for U21Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for U21Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// The three discrete series families of `U(2,1)`, named by the position of `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chamber {
    #[serde(rename = "++-")]
    PlusPlusMinus,
    #[serde(rename = "+-+")]
    PlusMinusPlus,
    #[serde(rename = "-++")]
    MinusPlusPlus,
}

impl Chamber {
    pub const ALL: [Chamber; 3] = [
        Chamber::PlusPlusMinus,
        Chamber::PlusMinusPlus,
        Chamber::MinusPlusPlus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Chamber::PlusPlusMinus => "++-",
            Chamber::PlusMinusPlus => "+-+",
            Chamber::MinusPlusPlus => "-++",
        }
    }

    /// Simple roots of the sorted parameter in the family's tau-invariant.
    pub fn tau_invariant(self) -> TauInvariantSet {
        let idx: &[usize] = match self {
            Chamber::PlusPlusMinus => &[1],
            Chamber::PlusMinusPlus => &[],
            Chamber::MinusPlusPlus => &[2],
        };
        TauInvariantSet::new(3, idx.iter().copied()).expect("indices below 3")
    }

    /// Assigns sorted values `l1 > l2 > l3` to `(x1, x2, y)`.
    fn place(self, l: [Rational; 3]) -> (Rational, Rational, Rational) {
        match self {
            Chamber::PlusPlusMinus => (l[0], l[1], l[2]),
            Chamber::PlusMinusPlus => (l[0], l[2], l[1]),
            Chamber::MinusPlusPlus => (l[1], l[2], l[0]),
        }
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct U21Case {
    pub id: &'static str,
    pub word: U21Word,
    pub delta: Chamber,
    #[serde(rename = "deltaPrime")]
    pub delta_prime: ShuffleWord,
    #[serde(rename = "limitPatterns")]
    pub limits: Vec<U21Word>,
    pub coherent: bool,
}

impl U21Case {
    pub fn pattern(&self) -> InterleavingPattern {
        self.word.pattern()
    }
}

const TABLE: [(&str, &str, &[&str]); 6] = [
    ("I", "x1 > xi > x2 > y > eta", &["x1 > xi > x2 = y > eta"]),
    ("II", "x1 > xi > eta > y > x2", &["x1 > xi > eta > y = x2"]),
    (
        "III",
        "x1 > y > x2 > xi > eta",
        &["x1 = y > x2 > xi > eta", "x1 > y = x2 > xi > eta"],
    ),
    ("IV", "x1 > y > eta > xi > x2", &["x1 = y > eta > xi > x2"]),
    (
        "V",
        "eta > xi > x1 > y > x2",
        &["eta > xi > x1 = y > x2", "eta > xi > x1 > y = x2"],
    ),
    ("VI", "eta > y > x1 > xi > x2", &["eta > y = x1 > xi > x2"]),
];

/// Cases I to VI with their limits of discrete series.
pub fn u21_cases() -> Vec<U21Case> {
    TABLE
        .iter()
        .map(|(id, word, limits)| {
            let word: U21Word = word.parse().expect("table word");
            U21Case {
                id,
                delta: word.chamber(),
                delta_prime: word.delta_prime(),
                limits: limits
                    .iter()
                    .map(|l| l.parse().expect("table limit"))
                    .collect(),
                coherent: *id == "II",
                word,
            }
        })
        .collect()
}

fn classify_word(word: &U21Word, assume_he_complete: bool) -> Result<Verdict> {
    if let Some(case) = u21_cases().into_iter().find(|c| c.word == *word) {
        return Ok(Verdict::nonzero(ProvenanceStep::new(
            TheoremTag::TableHe,
            format!("case {}: {word}", case.id),
        )));
    }
    let chamber = word.chamber();
    let vanish = tau_vanish(&chamber.tau_invariant(), &word.pattern())?;
    if vanish.value == VerdictValue::Zero {
        return Ok(vanish);
    }
    if assume_he_complete {
        return Ok(Verdict::zero(ProvenanceStep::new(
            TheoremTag::TableHe,
            format!("{word} is not in the table, which is assumed complete"),
        )));
    }
    Ok(Verdict::unknown())
}

/// The verdict for `Pi_(x1,x2,y)` against `pi_(xi,eta)`.
pub fn u21_query(
    x1: Rational,
    x2: Rational,
    y: Rational,
    xi: Rational,
    eta: Rational,
    assume_he_complete: bool,
) -> Result<Verdict> {
    for (name, v) in [("x1", x1), ("x2", x2), ("y", y)] {
        if !v.is_integer() {
            return Err(Error::domain(format!("{name} = {v} is not an integer")));
        }
    }
    for (name, v) in [("xi", xi), ("eta", eta)] {
        if v.is_integer() || !(v * 2).is_integer() {
            return Err(Error::domain(format!("{name} = {v} is not in Z + 1/2")));
        }
    }
    if x1 <= x2 {
        return Err(Error::domain(
            "x1 > x2 fails; degenerate parameters need the limit query",
        ));
    }
    if y == x1 || y == x2 {
        return Err(Error::domain(
            "y coincides with an x entry; use the limit query",
        ));
    }
    if xi == eta {
        return Err(Error::domain("xi = eta is singular"));
    }
    classify_word(&U21Word::realized(x1, x2, y, xi, eta)?, assume_he_complete)
}

/// NonZero for the eight listed limits of discrete series, else Unknown.
pub fn u21_limit_query(word: &U21Word) -> Result<Verdict> {
    if word.rel.contains(&Relation::WeakGE) {
        return Err(Error::domain("limit words use only > and ="));
    }
    let equalities = word.rel.iter().filter(|&&r| r == Relation::Equal).count();
    if equalities != 1 {
        return Err(Error::domain(format!(
            "a limit word needs exactly one '=', found {equalities}"
        )));
    }
    for case in u21_cases() {
        if case.limits.contains(word) {
            return Ok(Verdict::nonzero(ProvenanceStep::new(
                TheoremTag::TableHe,
                format!("limit of case {}: {word}", case.id),
            )));
        }
    }
    Ok(Verdict::unknown())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct U21AuditRow {
    pub chamber: Chamber,
    #[serde(rename = "deltaPrime")]
    pub delta_prime: ShuffleWord,
    pub pattern: InterleavingPattern,
    pub word: U21Word,
    pub verdict: Verdict,
}

/// Every strict configuration: chamber, order of `xi, eta`, and pattern of the sorted parameters.
pub fn u21_audit(assume_he_complete: bool) -> Result<Vec<U21AuditRow>> {
    let mut rows = Vec::new();
    for chamber in Chamber::ALL {
        for xi_first in [true, false] {
            for d in enumerate_strict(3, 2) {
                // Integers for x labels and half-integers for y labels, following the word.
                let (mut lam, mut nu) = (Vec::new(), Vec::new());
                for (k, l) in d.word().iter().enumerate() {
                    let top = Rational::int(10 - k as i64);
                    if l.is_x() {
                        lam.push(top);
                    } else {
                        nu.push(top - Rational::HALF);
                    }
                }
                let (x1, x2, y) = chamber.place([lam[0], lam[1], lam[2]]);
                let (xi, eta) = if xi_first {
                    (nu[0], nu[1])
                } else {
                    (nu[1], nu[0])
                };
                let word = U21Word::realized(x1, x2, y, xi, eta)?;
                debug_assert_eq!(classify(&ParamPoint::new(lam.clone(), nu.clone()))?, d);
                let verdict = u21_query(x1, x2, y, xi, eta, assume_he_complete)?;
                rows.push(U21AuditRow {
                    chamber,
                    delta_prime: word.delta_prime(),
                    pattern: d,
                    word,
                    verdict,
                });
            }
        }
    }
    Ok(rows)
}
