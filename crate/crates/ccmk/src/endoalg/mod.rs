//! Concrete endomorphism-ring arithmetic: unit and radical criteria,
//! elementary matrices, the tilde construction, the elementary-matrix
//! commutator factorizations and the determinant-evaluation map, all
//! verified by direct computation over exact coefficient fields.

pub mod field;
pub mod matrix;
pub mod module;
pub mod oracle;
pub mod series;
pub mod suites;
pub mod verify;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::{expand_multiplicities, tilde, EndoMatrix};
pub use module::{hom_membership, HomElement, ModuleDescriptor, ModuleKind};
pub use series::{SupportSemigroup, TruncatedSeries};
pub use verify::{verify_factorization, Counterexample, FactorizationCase, Verdict};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EndoError {
    #[error("insufficient precision: need at least {needed}, have {actual}")]
    InsufficientPrecision { needed: u64, actual: u64 },
    #[error("membership failure: {0}")]
    MembershipFailure(String),
    #[error("not a unit")]
    NotAUnit,
    #[error("incompatible modules: {0}")]
    IncompatibleModules(String),
    #[error("invalid case: {0}")]
    InvalidCase(String),
}
