//! Small dense linear algebra kernels.
//!
//! Everything in the crate works on rings with a few dozen spins at most, so
//! the matrices here are plain row-major `Vec` buffers and the algorithms are
//! the classic dense ones: cyclic Jacobi for symmetric eigenproblems,
//! one-sided Jacobi for complex singular values, LU with partial pivoting for
//! solves. No external decomposition routines are used; complex arithmetic is
//! carried out explicitly on re/im components via `num_complex`.

mod complex;
mod eigen;
mod quad;
mod real;
mod svd;

pub use complex::{CLu, CMat};
pub use eigen::sym_eigen;
pub use quad::gauss_legendre;
pub use real::Mat;
pub use svd::{sigma_max_fast, singular_values, svd, Svd};

use core::fmt;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// Matrix is singular to working precision.
    Singular,
    /// An iterative kernel did not converge within its sweep budget.
    NoConvergence,
    /// Operand shapes are incompatible.
    DimensionMismatch,
    /// A kernel requiring symmetry was handed a non-symmetric matrix.
    NotSymmetric,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Singular => write!(f, "matrix is singular to working precision"),
            LinalgError::NoConvergence => write!(f, "iteration did not converge"),
            LinalgError::DimensionMismatch => write!(f, "operand dimensions do not match"),
            LinalgError::NotSymmetric => write!(f, "matrix is not symmetric"),
        }
    }
}

impl core::error::Error for LinalgError {}
