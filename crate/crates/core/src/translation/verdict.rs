use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::Step;

/// The result that a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremTag {
    #[serde(rename = "Thm2.2")]
    TranslateUp,
    #[serde(rename = "Thm2.3")]
    TranslateDown,
    #[serde(rename = "Thm2.7-Stability")]
    Stability,
    #[serde(rename = "Thm2.11-Vanish")]
    TauVanish,
    #[serde(rename = "WeylLaw")]
    WeylLaw,
    #[serde(rename = "Table-He")]
    TableHe,
    #[serde(rename = "Thm3.3-GGP")]
    Ggp,
    #[serde(rename = "Thm4.1-Speh")]
    Speh,
    #[serde(rename = "Thm7.7-GL")]
    GlRegion,
    #[serde(rename = "Cor7.6-Jump")]
    JumpFences,
    #[serde(rename = "Thm8.5-UpqSym")]
    UpqSym,
    #[serde(rename = "Seed-Period")]
    SeedPeriod,
    #[serde(rename = "Stiefel")]
    Stiefel,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 13] = [
        TheoremTag::TranslateUp,
        TheoremTag::TranslateDown,
        TheoremTag::Stability,
        TheoremTag::TauVanish,
        TheoremTag::WeylLaw,
        TheoremTag::TableHe,
        TheoremTag::Ggp,
        TheoremTag::Speh,
        TheoremTag::GlRegion,
        TheoremTag::JumpFences,
        TheoremTag::UpqSym,
        TheoremTag::SeedPeriod,
        TheoremTag::Stiefel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::TranslateUp => "Thm2.2",
            TheoremTag::TranslateDown => "Thm2.3",
            TheoremTag::Stability => "Thm2.7-Stability",
            TheoremTag::TauVanish => "Thm2.11-Vanish",
            TheoremTag::WeylLaw => "WeylLaw",
            TheoremTag::TableHe => "Table-He",
            TheoremTag::Ggp => "Thm3.3-GGP",
            TheoremTag::Speh => "Thm4.1-Speh",
            TheoremTag::GlRegion => "Thm7.7-GL",
            TheoremTag::JumpFences => "Cor7.6-Jump",
            TheoremTag::UpqSym => "Thm8.5-UpqSym",
            TheoremTag::SeedPeriod => "Seed-Period",
            TheoremTag::Stiefel => "Stiefel",
        }
    }

    /// A fixed one-line description used in reports.
    pub fn citation(self) -> &'static str {
        match self {
            TheoremTag::TranslateUp => "translation by the standard representation",
            TheoremTag::TranslateDown => "translation by the dual of the standard representation",
            TheoremTag::Stability => "stability of multiplicities within fences",
            TheoremTag::TauVanish => "vanishing from an adjacent string in the tau-invariant",
            TheoremTag::WeylLaw => "Weyl interlacing law for U(n) to U(n-1)",
            TheoremTag::TableHe => "U(2,1) to U(1,1) discrete series table",
            TheoremTag::Ggp => "constancy of discrete series branching on a pattern",
            TheoremTag::Speh => "Speh representation branching",
            TheoremTag::GlRegion => "GL(n,R) multiplicity one above the threshold",
            TheoremTag::JumpFences => "GL(n,R) jumping all fences",
            TheoremTag::UpqSym => "U(p,q) symmetric space multiplicity one",
            TheoremTag::SeedPeriod => "period integral seed",
            TheoremTag::Stiefel => "rank-one Stiefel extension of the period seed",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProvenanceStep {
    pub tag: TheoremTag,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<Step>>,
}

impl ProvenanceStep {
    pub fn new(tag: TheoremTag, detail: impl Into<String>) -> Self {
        ProvenanceStep {
            tag,
            detail: detail.into(),
            walk: None,
        }
    }
}

/// The order is the information order: `Unknown < NonZero < One` and `Unknown < Zero`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictValue {
    Zero,
    One,
    NonZero,
    Unknown,
}

impl VerdictValue {
    pub fn join(self, other: VerdictValue) -> Result<VerdictValue> {
        use VerdictValue::*;
        match (self, other) {
            (Unknown, v) | (v, Unknown) => Ok(v),
            (Zero, Zero) => Ok(Zero),
            (Zero, _) | (_, Zero) => Err(Error::Consistency(format!("{self} contradicts {other}"))),
            (One, _) | (_, One) => Ok(One),
            (NonZero, NonZero) => Ok(NonZero),
        }
    }

    pub fn is_nonzero(self) -> bool {
        matches!(self, VerdictValue::One | VerdictValue::NonZero)
    }
}

impl fmt::Display for VerdictValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictValue::Zero => "Zero",
            VerdictValue::One => "One",
            VerdictValue::NonZero => "NonZero",
            VerdictValue::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: VerdictValue,
    pub provenance: Vec<ProvenanceStep>,
}

impl Verdict {
    pub fn unknown() -> Self {
        Verdict {
            value: VerdictValue::Unknown,
            provenance: Vec::new(),
        }
    }

    /// A decided verdict; its provenance must not be empty.
    pub fn new(value: VerdictValue, provenance: Vec<ProvenanceStep>) -> Self {
        debug_assert!(value == VerdictValue::Unknown || !provenance.is_empty());
        Verdict { value, provenance }
    }

    pub fn one(step: ProvenanceStep) -> Self {
        Verdict::new(VerdictValue::One, vec![step])
    }

    pub fn zero(step: ProvenanceStep) -> Self {
        Verdict::new(VerdictValue::Zero, vec![step])
    }

    pub fn nonzero(step: ProvenanceStep) -> Self {
        Verdict::new(VerdictValue::NonZero, vec![step])
    }

    pub fn tags(&self) -> Vec<TheoremTag> {
        self.provenance.iter().map(|p| p.tag).collect()
    }

    /// True when the invariants hold: decided verdicts carry provenance.
    pub fn is_well_formed(&self) -> bool {
        self.value == VerdictValue::Unknown || !self.provenance.is_empty()
    }
}
