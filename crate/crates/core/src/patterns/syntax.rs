//! Text form `x1 > y1 >= x2 = y2` and JSON form `{"word":[..],"rel":[..]}`.

use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{InterleavingPattern, Label, Relation};
use crate::error::{Error, Result};

/// A label name as written in a chain, before it is interpreted.
pub type ChainToken = String;

/// Splits `a > b >= c = d` into names and relations. The empty string is the empty chain.
pub fn parse_chain(s: &str) -> Result<(Vec<ChainToken>, Vec<Relation>)> {
    let mut names = Vec::new();
    let mut rels = Vec::new();
    let mut chars = s.chars().peekable();
    let mut expect_name = true;
    loop {
        while chars.next_if(|c| c.is_whitespace()).is_some() {}
        let Some(&c) = chars.peek() else { break };
        if expect_name {
            let mut name = String::new();
            while let Some(c) = chars.next_if(|c| c.is_alphanumeric() || *c == '_') {
                name.push(c);
            }
            if name.is_empty() {
                return Err(Error::parse(format!("expected a label at {c:?} in {s:?}")));
            }
            names.push(name);
        } else {
            chars.next();
            let rel = match c {
                '>' if chars.next_if_eq(&'=').is_some() => Relation::WeakGE,
                '>' => Relation::Strict,
                '≥' => Relation::WeakGE,
                '=' => Relation::Equal,
                _ => {
                    return Err(Error::parse(format!(
                        "expected '>', '>=' or '=' at {c:?} in {s:?}"
                    )))
                }
            };
            rels.push(rel);
        }
        expect_name = !expect_name;
    }
    if !names.is_empty() && expect_name {
        return Err(Error::parse(format!("chain ends with a relation: {s:?}")));
    }
    Ok((names, rels))
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("not a pattern label: {s:?}"));
        let (kind, digits) = s.split_at_checked(1).ok_or_else(bad)?;
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || digits.starts_with('0')
        {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        match kind {
            "x" => Ok(Label::X(index)),
            "y" => Ok(Label::Y(index)),
            _ => Err(bad()),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            ">" => Ok(Relation::Strict),
            ">=" => Ok(Relation::WeakGE),
            "=" => Ok(Relation::Equal),
            _ => Err(Error::parse(format!("not a relation: {s:?}"))),
        }
    }
}

impl FromStr for InterleavingPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (names, rel) = parse_chain(s)?;
        let word = names
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Label>>>()?;
        InterleavingPattern::new(word, rel).map_err(|e| Error::parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct PatternJson {
    word: Vec<String>,
    rel: Vec<String>,
}

impl Serialize for InterleavingPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson {
            word: self.word.iter().map(ToString::to_string).collect(),
            rel: self.rel.iter().map(|r| r.symbol().to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for InterleavingPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PatternJson::deserialize(deserializer)?;
        let word = raw
            .word
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Label>>>();
        let rel = raw
            .rel
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Relation>>>();
        word.and_then(|w| InterleavingPattern::new(w, rel?))
            .map_err(D::Error::custom)
    }
}
