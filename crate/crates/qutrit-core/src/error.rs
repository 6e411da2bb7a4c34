//! Error type shared across the crate.

use thiserror::Error;

use crate::sections::SectionId;

/// Errors produced by state validation, conversions and section queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input matrix deviates from Hermitian symmetry by more than the tolerance.
    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { asymmetry: f64, tol: f64 },
    /// Input matrix trace deviates from one by more than the tolerance.
    #[error("matrix trace is not one: |tr - 1| = {deviation:.3e} exceeds tolerance {tol:.3e}")]
    TraceNotOne { deviation: f64, tol: f64 },
    /// Spin-1 weights do not sum to one.
    #[error("spin-1 weights sum to {sum} instead of 1")]
    WeightSumViolation { sum: f64 },
    /// A weight is negative beyond the clamping tolerance.
    #[error("weight {weight:.3e} is negative")]
    NegativeWeight { weight: f64 },
    /// Section order outside the supported range 1..=8.
    #[error("section order {k} is outside 1..=8")]
    InvalidOrder { k: usize },
    /// A section axis outside 1..=8.
    #[error("section axis {axis} is outside 1..=8")]
    InvalidAxis { axis: u8 },
    /// The same axis was given twice.
    #[error("duplicate section axis {axis}")]
    DuplicateAxis { axis: u8 },
    /// An empty axis set was given.
    #[error("section axis set is empty")]
    EmptySection,
    /// Coordinate count does not match the section order.
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    /// No reference pure-state data is embedded for the section.
    #[error("no embedded expectation for section {section}")]
    NoExpectation { section: SectionId },
}

pub type Result<T> = std::result::Result<T, Error>;
