//! Exact and numeric scalars: rationals, univariate polynomials and rational
//! functions over any field, and the q-Pochhammer family of helpers.

mod field;
mod poly;
mod qanalog;
mod ratfunc;

pub use field::{parse_rational, rat, BigRat, Field, Ring};
pub use poly::Poly;
pub use qanalog::{inv_qpoch_inf_series, qbinom, qbinom_ratq, qfact, qpoch, qpoch_infinite};
pub use ratfunc::{format_poly, RatFunc, RatQ, RatQT, Symbolic};
