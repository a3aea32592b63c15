//! Polynomial and symmetric-function containers: sparse multivariate
//! polynomials, symmetric polynomials in monomial coordinates, truncated
//! symmetric functions with basis changes, omega maps and expansions.

mod expansion;
mod multipoly;
mod omega;
mod symfunc;
mod sympoly;

pub use expansion::{ExpBasis, Expansion};
pub use multipoly::{inv_one_plus_x_pow, Exponents, MultiPoly, RationalMulti};
pub use omega::{omega, OmegaMode};
pub use symfunc::{alt_sign, complete_homogeneous, from_monomial, to_monomial, Basis, SymFunc};
pub use sympoly::{bounded_partitions, distinct_permutations, SymPoly};
