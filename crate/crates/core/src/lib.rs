//! Exact Lie algebra cohomology workbench.
//!
//! The numerical core is generic over an exact [`Field`]; the aliases below
//! fix the two instances used in practice: plain rationals and ℚ(t), the
//! rationals extended by one formal transcendental.

pub mod ce;
pub mod exterior;
pub mod field;
pub mod format;
pub mod gh;
pub mod liealg;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod torus;

pub use ce::{BettiTable, CeError, CochainComplex, E1Table};
pub use field::Field;
pub use gh::{cross_validate, gh_cohomology, Assumptions, GhReport, Theorem, Verdict};
pub use liealg::{catalog, CompactTypeCertificate, LieAlgebra, LieError};
pub use linalg::{Definiteness, Inertia, LinalgError, Rref, Subspace};
pub use matrix::Matrix;
pub use scalar::{Scalar, ScalarParseError};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type QMatrix = Matrix<Rational>;
pub type ScalarMatrix = Matrix<Scalar>;
pub type ScalarSubspace = Subspace<Scalar>;
pub type ScalarLieAlgebra = LieAlgebra<Scalar>;
