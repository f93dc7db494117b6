//! Exact analysis of strongly regular graph parameters.
//!
//! The crate provides exact rational linear algebra ([`exact`]), SRG
//! spectra and representation dot products ([`params`]), the zonal
//! 4-clique bound ([`zonal`]), Gram-matrix partition certificates
//! ([`euclid`]), counting lemmas ([`counting`]), graph search
//! ([`graph`]) and a staged re-verification of the non-existence of
//! SRG(76,30,8,14) ([`proof`]).

pub mod counting;
pub mod error;
pub mod euclid;
pub mod exact;
pub mod graph;
pub mod params;
pub mod proof;
pub mod zonal;

pub use error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Univariate polynomial with rational coefficients.
pub type RatPoly = exact::UniPoly<Rational>;
/// Dense rational matrix.
pub type RatMatrix = exact::Matrix<Rational>;
/// Dense matrix of rational polynomials.
pub type PolyMatrix = exact::Matrix<RatPoly>;
/// Dense matrix over the prime field.
pub type ModMatrix = exact::Matrix<exact::ModP>;
/// Dense floating-point matrix, for diagnostics only.
pub type FloatMatrix = exact::Matrix<f64>;
