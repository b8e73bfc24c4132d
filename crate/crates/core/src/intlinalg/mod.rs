//! Exact linear algebra over ℤ and ℤ/2.

mod matrix;
mod signature;
mod smith;
mod z2;

pub use matrix::{IntMatrix, IntSymMatrix};
pub use signature::{inertia, signature, Inertia};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use z2::{solve_mod2, Mod2Solution, Z2Matrix, Z2Vector};

pub(crate) use matrix::bareiss_determinant;
