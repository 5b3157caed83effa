//! Exact scalars, dense matrices and polynomials.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::{Matrix, Rref};
pub use poly::Poly;
pub use scalar::{Field, Scalar};
pub use subspace::{extend_basis, RowBasis};
