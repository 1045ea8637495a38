//! Exact integer linear algebra for distance-spectra work.
//!
//! Everything here is rounding-free: characteristic polynomials come from a
//! division-free (Berkowitz-style) recurrence, rank from fraction-free
//! Bareiss elimination, inertia from congruence transformations, and real
//! roots from Sturm sequences with dyadic bisection. Floating point appears
//! only in the final root approximations handed back to callers.

mod inertia;
mod matrix;
mod poly;
mod roots;

pub use inertia::{inertia_shifted, inertia_symmetric, Inertia};
pub use matrix::{char_poly, determinant, rank, IntMatrix};
pub use poly::{div_exact, poly_divides, poly_gcd, IntPoly};
pub use roots::{real_roots, square_free_decomposition, sturm_chain};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}
