//! Computational kernel for matroids close to binary: explicit basis
//! families, GF(2) representations, circuit-hyperplane relaxation and
//! tightening, minor search, 2-sum tree decompositions, and membership
//! deciders for the classes Z (every element has a binary deletion or
//! contraction), R (binary or a single relaxation of binary), and D (double
//! relaxations of connected binary matroids along complementary
//! circuit-hyperplanes), together with a catalog of named matroids and
//! verification suites exercising them.

pub mod catalog;
pub mod classes;
pub mod corpus;
pub mod error;
pub mod fileio;
pub mod gf2;
pub mod ground;
pub mod matroid;
pub mod minors;
pub mod relaxed;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::BinaryMatrix;
pub use ground::{GroundSet, Subset};
pub use matroid::{ConnectivityReport, Matroid};
pub use relaxed::RelaxedBinaryMatroid;
