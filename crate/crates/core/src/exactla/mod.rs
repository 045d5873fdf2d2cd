//! Exact scalars and exact linear algebra.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{kernel, rref, solve_linear, LinearSolution, Matrix, Vector};
pub use scalar::{Field, Scalar};
pub use subspace::Subspace;
