//! Interleaving patterns, fence walks and multiplicity verdicts for the
//! branching problem of real forms of `(GL(n), GL(n-1))`.
//!
//! Every scalar is an exact [`Rational`]; nothing in a decision path touches
//! floating point.

pub mod error;
pub mod gl_symmetric;
pub mod patterns;
pub mod rational;
pub mod translation;
pub mod unitary_ds;
pub mod upq_symmetric;
pub mod weyl;

pub use error::{Error, Result};
pub use patterns::{
    classify, enumerate_strict, extremal_mu, fence_walk, fences, m_of, satisfies, Fence,
    InterleavingPattern, Label, ParamPoint, Relation, Step,
};
pub use rational::{parse_vector, render_vector, Rational};
pub use translation::{Fact, FactStore, GroupPair, TheoremTag, Verdict, VerdictValue};
