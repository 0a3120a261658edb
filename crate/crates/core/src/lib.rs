//! Exact-arithmetic computations with lattices in nilpotent and solvable
//! groups and their abstract commensurators.
//!
//! Everything is carried out over the rationals: linear algebra, the
//! Malcev exp/log dictionary, Baker-Campbell-Hausdorff, congruence-level
//! subgroups, and the worked commensurator structures (Heisenberg, Sol,
//! PSL_n). No floating point appears anywhere.



pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod samples;
pub mod scalar;


pub use error::{Error, Result};
pub use scalar::Q;

/// Matrix with exact rational entries.
pub type QMatrix = matrix::Matrix<Q>;
/// Polynomial with exact rational coefficients.
pub type QPolynomial = poly::Poly<Q>;
