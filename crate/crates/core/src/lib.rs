//! Exact computations in the exceptional simple Lie algebras: root systems,
//! Chevalley bases, nilpotent orbits from weighted Dynkin diagrams, and the
//! structure of their centralisers.
//!
//! All arithmetic is exact. The linear algebra is generic over [`scalar::Field`];
//! [`Q`] (a hybrid machine-word / arbitrary-precision rational) is the default
//! field and [`scalar::Fp`] is used for fast modular rank certificates.

pub mod error;
pub mod exactla;
pub mod liealg;
pub mod orbits;
pub mod reach;
pub mod refdata;
pub mod rootsys;
pub mod scalar;

pub use error::{Error, Result};
pub use exactla::Matrix;
pub use liealg::{Element, LieAlgebra, Subspace};
pub use orbits::{NilpotentOrbit, Sl2Triple, WeightedDynkinDiagram};
pub use reach::OrbitAnalysis;
pub use rootsys::{Root, RootSystem, TypeRank};

/// Exact rational scalar used throughout.
pub type Q = scalar::Rational;
/// Rational matrix.
pub type QMatrix = Matrix<Q>;
/// Matrix over the prime field used for rank certificates.
pub type FpMatrix = Matrix<scalar::Fp>;
