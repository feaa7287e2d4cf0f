//! Exact integer linear algebra: Hermite normal form, integer kernels of
//! congruence systems, fraction-free rank and determinant, characteristic
//! polynomials.

mod elim;
mod hnf;
mod matrix;

pub use elim::{char_poly, det, gram_det, rank, rank_bounded, rank_mod_prime};
pub use hnf::{hnf, in_row_span, kernel_basis, ConstraintRow, KernelProblem};
pub use matrix::IntMatrix;
