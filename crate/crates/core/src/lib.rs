//! Exact algebra for forced periodicity of two-dimensional perfect colorings.
//!
//! Configurations of `Z²` are studied through Laurent polynomials: a shape `D`
//! has the characteristic polynomial `f_D = Σ_{u∈D} X^{-u}`, and a coloring is
//! forced to be periodic whenever suitable polynomials built from `f_D` have no
//! *line polynomial factors*. This crate finds those factors, computes the
//! values `t` for which `f_D - t` acquires one, turns that into verdicts for
//! coverings and colorings, and searches/verifies colorings on finite tori.
//!
//! The algebraic modules are generic over an integer [`Scalar`]; the aliases
//! below fix it to [`BigInt`], which is what the rest of the crate uses.

pub mod cli;
mod error;
pub mod geometry;
pub mod linefactor;
pub mod perfect;
pub mod poly2;
mod scalar;
pub mod unipoly;

pub use error::{Error, Result};
pub use geometry::Direction;
pub use poly2::{Exponent, Shape};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;

/// Default coefficient type.
pub type Int = BigInt;
/// Exact rational over [`Int`].
pub type Rational = Ratio<BigInt>;

pub type LaurentPoly2 = poly2::LaurentPoly<BigInt>;
pub type UniPoly = unipoly::UniPoly<BigInt>;
pub type ParamUniPoly = unipoly::ParamUniPoly<BigInt>;
pub type FiberSet = linefactor::FiberSet<BigInt>;
pub type LineFactorReport = linefactor::LineFactorReport<BigInt>;
pub type CriticalTReport = linefactor::CriticalTReport<BigInt>;
