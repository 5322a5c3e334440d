//! Persisted seed knowledge: one [`Fact`] per JSON line.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::verdict::{ProvenanceStep, Verdict, VerdictValue};
use crate::error::{Error, Result};
use crate::patterns::{satisfies, InterleavingPattern, ParamPoint};
use crate::rational::{render_vector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Group {
    Compact(u32),
    Indefinite(u32, u32),
    GeneralLinear(u32),
}

impl Group {
    fn parse(s: &str) -> Option<Group> {
        let nums = |inner: &str| -> Option<Vec<u32>> {
            inner.split(',').map(|t| t.trim().parse().ok()).collect()
        };
        if let Some(inner) = s.strip_prefix("GL(").and_then(|t| t.strip_suffix(",R)")) {
            return Some(Group::GeneralLinear(inner.trim().parse().ok()?));
        }
        let inner = s.strip_prefix("U(")?.strip_suffix(')')?;
        match nums(inner)?.as_slice() {
            [n] => Some(Group::Compact(*n)),
            [p, q] => Some(Group::Indefinite(*p, *q)),
            _ => None,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Compact(n) => write!(f, "U({n})"),
            Group::Indefinite(p, q) => write!(f, "U({p},{q})"),
            Group::GeneralLinear(n) => write!(f, "GL({n},R)"),
        }
    }
}

/// A pair `G > G'` such as `U(3)>U(2)`, `U(2,1)>U(1,1)` or `GL(5,R)>GL(4,R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupPair {
    big: Group,
    small: Group,
}

impl GroupPair {
    pub fn compact(n: u32) -> Self {
        GroupPair {
            big: Group::Compact(n),
            small: Group::Compact(n.saturating_sub(1)),
        }
    }

    pub fn indefinite(p: u32, q: u32) -> Self {
        GroupPair {
            big: Group::Indefinite(p, q),
            small: Group::Indefinite(p.saturating_sub(1), q),
        }
    }

    pub fn general_linear(n: u32) -> Self {
        GroupPair {
            big: Group::GeneralLinear(n),
            small: Group::GeneralLinear(n.saturating_sub(1)),
        }
    }

    /// Every supported pair drops the rank by one and is multiplicity-free.
    pub fn is_multiplicity_free(&self) -> bool {
        match (self.big, self.small) {
            (Group::Compact(a), Group::Compact(b))
            | (Group::GeneralLinear(a), Group::GeneralLinear(b)) => a == b + 1,
            (Group::Indefinite(p, q), Group::Indefinite(p2, q2)) => {
                (p == p2 + 1 && q == q2) || (p == p2 && q == q2 + 1)
            }
            _ => false,
        }
    }
}

impl fmt::Display for GroupPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.big, self.small)
    }
}

impl FromStr for GroupPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("not a group pair: {s:?}"));
        let (a, b) = s.split_once('>').ok_or_else(bad)?;
        let pair = GroupPair {
            big: Group::parse(a.trim()).ok_or_else(bad)?,
            small: Group::parse(b.trim()).ok_or_else(bad)?,
        };
        if pair.is_multiplicity_free() {
            Ok(pair)
        } else {
            Err(Error::parse(format!("unsupported group pair {s:?}")))
        }
    }
}

impl Serialize for GroupPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

/// A known multiplicity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    #[serde(rename = "groupPair")]
    pub group_pair: GroupPair,
    pub pattern: InterleavingPattern,
    pub lambda: Vec<Rational>,
    pub nu: Vec<Rational>,
    pub verdict: VerdictValue,
    pub provenance: Vec<ProvenanceStep>,
    /// Whether generalized eigenspaces under translation are eigenspaces for this family.
    #[serde(
        rename = "eigenspaceOk",
        default = "default_true",
        skip_serializing_if = "is_true"
    )]
    pub eigenspace_ok: bool,
    /// Extra family data, such as the shuffle words of a discrete series pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl Fact {
    /// Checks that `(lambda, nu)` satisfies the pattern.
    pub fn new(
        group_pair: GroupPair,
        pattern: InterleavingPattern,
        lambda: Vec<Rational>,
        nu: Vec<Rational>,
        verdict: Verdict,
    ) -> Result<Self> {
        let fact = Fact {
            group_pair,
            pattern,
            lambda,
            nu,
            verdict: verdict.value,
            provenance: verdict.provenance,
            eigenspace_ok: true,
            family: None,
        };
        fact.validate()?;
        Ok(fact)
    }

    pub fn with_family(mut self, family: impl Into<String>) -> Self {
        self.family = Some(family.into());
        self
    }

    pub fn validate(&self) -> Result<()> {
        let p = ParamPoint::new(self.lambda.clone(), self.nu.clone());
        if !satisfies(&self.pattern, &p)? {
            return Err(Error::domain(format!(
                "fact point ({}; {}) does not satisfy {}",
                render_vector(&self.lambda),
                render_vector(&self.nu),
                self.pattern
            )));
        }
        if self.verdict != VerdictValue::Unknown && self.provenance.is_empty() {
            return Err(Error::domain("a decided fact needs provenance"));
        }
        Ok(())
    }

    pub fn verdict(&self) -> Verdict {
        Verdict {
            value: self.verdict,
            provenance: self.provenance.clone(),
        }
    }

    fn key(
        &self,
    ) -> (
        GroupPair,
        &InterleavingPattern,
        &[Rational],
        &[Rational],
        Option<&str>,
    ) {
        (
            self.group_pair,
            &self.pattern,
            &self.lambda,
            &self.nu,
            self.family.as_deref(),
        )
    }
}

/// An ordered collection of facts without duplicate points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactStore {
    facts: Vec<Fact>,
}

impl FactStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    /// Adds a fact, joining verdicts at an existing point. Zero against nonzero is a consistency error.
    pub fn insert(&mut self, fact: Fact) -> Result<()> {
        fact.validate()?;
        match self.facts.iter().position(|f| f.key() == fact.key()) {
            None => self.facts.push(fact),
            Some(k) => {
                let joined = self.facts[k].verdict.join(fact.verdict).map_err(|_| {
                    Error::Consistency(format!(
                        "fact {} is {} but the new fact says {}",
                        k + 1,
                        self.facts[k].verdict,
                        fact.verdict
                    ))
                })?;
                if joined != self.facts[k].verdict {
                    self.facts[k] = Fact {
                        verdict: joined,
                        ..fact
                    };
                }
            }
        }
        Ok(())
    }

    /// The union of two stores. Every contradiction is listed by line number.
    pub fn merge(&self, other: &FactStore) -> Result<FactStore> {
        let collisions: Vec<String> = other
            .facts
            .iter()
            .enumerate()
            .filter_map(|(j, g)| {
                let i = self.facts.iter().position(|f| f.key() == g.key())?;
                self.facts[i].verdict.join(g.verdict).is_err().then(|| {
                    format!(
                        "line {} ({}) vs line {} ({})",
                        i + 1,
                        self.facts[i].verdict,
                        j + 1,
                        g.verdict
                    )
                })
            })
            .collect();
        if !collisions.is_empty() {
            return Err(Error::Consistency(format!(
                "contradictory facts: {}",
                collisions.join("; ")
            )));
        }
        let mut out = self.clone();
        for g in &other.facts {
            out.insert(g.clone())?;
        }
        Ok(out)
    }

    /// Parses JSON lines; blank lines are skipped.
    pub fn from_jsonl(text: &str) -> Result<FactStore> {
        let mut store = FactStore::new();
        for (k, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fact: Fact = serde_json::from_str(line)
                .map_err(|e| Error::parse(format!("line {}: {e}", k + 1)))?;
            fact.validate()
                .map_err(|e| Error::parse(format!("line {}: {e}", k + 1)))?;
            store.insert(fact).map_err(|e| match e {
                Error::Consistency(m) => Error::Consistency(format!("line {}: {m}", k + 1)),
                other => other,
            })?;
        }
        Ok(store)
    }

    pub fn to_jsonl(&self) -> String {
        self.facts
            .iter()
            .map(|f| serde_json::to_string(f).expect("facts serialize") + "\n")
            .collect()
    }

    /// Facts matching the predicate.
    pub fn find<'a>(
        &'a self,
        pred: impl Fn(&Fact) -> bool + 'a,
    ) -> impl Iterator<Item = &'a Fact> + 'a {
        self.facts.iter().filter(move |f| pred(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ints;
    use crate::translation::TheoremTag;

    fn fact(verdict: VerdictValue, lam: &[i64]) -> Fact {
        let v = Verdict::new(
            verdict,
            vec![ProvenanceStep::new(TheoremTag::WeylLaw, "test")],
        );
        Fact::new(
            GroupPair::compact(2),
            "x1 > y1 > x2".parse().unwrap(),
            ints(lam),
            ints(&[0]),
            v,
        )
        .unwrap()
    }

    #[test]
    fn group_pairs_parse_and_print() {
        for s in [
            "U(3)>U(2)",
            "U(2,1)>U(1,1)",
            "GL(5,R)>GL(4,R)",
            "U(2,2)>U(2,1)",
        ] {
            let g: GroupPair = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
            assert!(g.is_multiplicity_free());
        }
        assert!("U(3)>U(1)".parse::<GroupPair>().is_err());
        assert!("SO(3)>SO(2)".parse::<GroupPair>().is_err());
    }

    #[test]
    fn fact_requires_its_pattern() {
        let bad = Fact::new(
            GroupPair::compact(2),
            "x1 > y1 > x2".parse().unwrap(),
            ints(&[1, 2]),
            ints(&[0]),
            Verdict::unknown(),
        );
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn jsonl_round_trip() {
        let mut store = FactStore::new();
        store.insert(fact(VerdictValue::One, &[2, -1])).unwrap();
        store
            .insert(fact(VerdictValue::Zero, &[3, -1]).with_family("w=+-"))
            .unwrap();
        let text = store.to_jsonl();
        assert!(text
            .lines()
            .next()
            .unwrap()
            .contains(r#""groupPair":"U(2)>U(1)""#));
        assert_eq!(FactStore::from_jsonl(&text).unwrap(), store);
    }

    #[test]
    fn merge_is_idempotent_and_detects_contradictions() {
        let mut a = FactStore::new();
        a.insert(fact(VerdictValue::NonZero, &[2, -1])).unwrap();
        assert_eq!(a.merge(&a).unwrap(), a);
        let mut b = FactStore::new();
        b.insert(fact(VerdictValue::One, &[2, -1])).unwrap();
        b.insert(fact(VerdictValue::Zero, &[5, -1])).unwrap();
        let m = a.merge(&b).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.facts()[0].verdict, VerdictValue::One);
        let mut c = FactStore::new();
        c.insert(fact(VerdictValue::Zero, &[2, -1])).unwrap();
        let err = a.merge(&c).unwrap_err();
        assert!(matches!(&err, Error::Consistency(m) if m.contains("line 1")));
    }

    #[test]
    fn malformed_lines_are_parse_errors() {
        assert!(matches!(FactStore::from_jsonl("{}"), Err(Error::Parse(_))));
        assert!(matches!(
            FactStore::from_jsonl("not json"),
            Err(Error::Parse(_))
        ));
    }
}
