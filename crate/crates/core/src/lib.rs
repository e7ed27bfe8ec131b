//! Combinatorics and homological algebra around the parabolic
//! Deligne--Lusztig varieties `X_{n,d}` attached to `GL_n(q)`.
//!
//! The crate has three layers:
//!
//! * [`partition`] -- partitions, beta-sets, d-hooks and abacus moves,
//!   together with the cohomological-degree and Frobenius-exponent
//!   bookkeeping attached to hook additions;
//! * [`character`] and [`cohomology`] -- virtual unipotent characters,
//!   Harish-Chandra restriction, Phi_d-blocks, and the closed-form
//!   cohomology tables of `X_{n,d}` over characteristic zero and mod l,
//!   with their internal consistency oracles (long-exact-sequence Euler
//!   checks, torsion-free gate, eigenvalue cuts);
//! * [`gf`], [`brauer`] and [`complex`] -- exact linear algebra over GF(p),
//!   a quiver-representation model of the line-shaped Brauer tree algebra,
//!   syzygy walks and projective resolutions, and homotopy-category Hom
//!   computations for bounded complexes of projectives (partial-tilting
//!   verification).
//!
//! Everything is deterministic: echelon pivoting is fixed, bases are
//! canonical, and sweeps enumerate their cells in a stable order.

pub mod brauer;
pub mod character;
pub mod cohomology;
pub mod complex;
pub mod gf;
pub mod partition;
pub mod verify;

/// Crate-wide error type; the variants mirror the failure contracts of the
/// public operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid hook: {0}")]
    InvalidHook(String),
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("torsion-free gate refused: {0}")]
    GateRefused(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("model violation: {0}")]
    ModelViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use brauer::{BrauerLine, Rep, RepMap};
pub use character::{EllParams, GradedChar, PhiBlock, VirtualChar};
pub use cohomology::{CohomologyTable, Normalization, RingTag, TorsionFreeStatus};
pub use complex::ProjComplex;
pub use partition::{BetaSet, Partition};
