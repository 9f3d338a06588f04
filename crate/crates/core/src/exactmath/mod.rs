//! Exact and high-precision scalar arithmetic, polynomials, determinants,
//! hypergeometric sums and truncated power series.

mod bijet;
mod field;
mod gaussian;
mod jet;
mod matrix;
mod mpoly;
pub(crate) mod ops_macros;
mod poly;
mod qsqrt3;
pub mod real;
mod series;

pub type ExactRational = num_rational::BigRational;

pub use bijet::BiJet;
pub use field::{format_rational, is_nonnegative, parse_rational, rat, Field, Ring};
pub use gaussian::GaussianRational;
pub use jet::Jet;
pub use matrix::{determinant, determinant_cofactor, lu_determinant, LuDeterminant};
pub use mpoly::MPoly;
pub use poly::Poly;
pub use qsqrt3::{QSqrt3, Sqrt3Scaled};
pub use real::{digits_to_bits, with_precision, Real};
pub use series::{
    binomial, factorial, hyp3f2_terminating, hypergeometric_terminating,
    hypergeometric_terminating_at, pochhammer,
};
