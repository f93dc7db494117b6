//! Exact scalars, polynomials and dense matrices.

mod matrix;
mod multipoly;
mod poly;
mod scalar;
mod surd;

pub use matrix::{normalize_first_nonzero, proportional, AffineSolution, Echelon, EigenSign, Matrix};
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use scalar::{ExactRing, ModP, Scalar, MODULUS};
pub use surd::QuadSurd;
