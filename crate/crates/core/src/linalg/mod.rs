//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
mod quotient;
mod subspace;
pub mod vector;

pub use matrix::{Matrix, Solution};
pub use quotient::{balanced_tensor, descend, descend_projected, intertwiners, unvec, QuotientSpace};
pub use subspace::Subspace;
