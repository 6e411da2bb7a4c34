//! Verification-grade toolkit for the qutrit state space.
//!
//! The crate converts between the density-matrix, SU(3) (Gell-Mann) and
//! spin-1 parameterizations of a qutrit state, computes the trace and
//! parameter invariants with the associated 3-dimensional state vectors
//! `w`, `u`, `v`, and explores the coordinate sections of the 8-dimensional
//! parameter space: shape classification, boundary point-cloud extraction
//! and numerical pure-state search. Seeded samplers and an independent
//! eigenvalue oracle back the property suites.
//!
//! Everything is plain-value and deterministic: no global state, no
//! platform randomness, and all operations are pure functions that can be
//! mapped over in parallel.

// indexed loops mirror the (i, j) matrix arithmetic throughout
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod gellmann;
pub mod matrix;
pub mod sampling;
pub mod sections;
pub mod spin1;
pub mod vectors;

pub use error::{Error, Result};
pub use gellmann::GellMannVector;
pub use matrix::{CharPoly, DensityMatrix, PurityClass, TraceInvariants};
pub use sampling::{psd_oracle, random_mixed, random_pure, random_rank2, RngStream};
pub use sections::{
    boundary_cloud, enumerate_sections, find_pure_states, section_class, section_report,
    verify_catalog, BoundaryPoint, CatalogReport, PointCloud, PureSearchConfig,
    PureStateSolution, SectionClass, SectionId, SectionReport, SolutionKind,
};
pub use spin1::{weights_from_angles, SpinOneParams};
pub use vectors::{
    derived_spin, mixing_volume, real_components, u_signed_squares, v_signed_squares,
    vector_triple, w_vector, SpinDerived, StateVectors,
};
