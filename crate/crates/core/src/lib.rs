//! Inhomogeneous q-Whittaker polynomials and their relatives: exact branching,
//! structure constants, positive specializations and partition measures.

pub mod error;
pub mod families;
pub mod partitions;
pub mod polyspace;
pub mod scalar;
pub mod specialization;
pub mod structure;
pub mod verify;

pub use error::{IqwError, Result};
pub use partitions::Partition;
pub use scalar::{BigRat, Field, Poly, RatFunc, RatQ, RatQT, Ring};
