//! Exact verification toolkit for the twisted quantum affine algebra of type
//! `A_{2n-1}^{(2)}` at level zero.
//!
//! The crate builds the trigonometric R-matrix `R̄(u)` on `C^{2n} ⊗ C^{2n}`,
//! the vector representation of the Drinfeld generators, evaluation
//! L-operators with their Gauss decomposition, and the Drinfeld currents
//! extracted from it, and checks the identities relating them in exact
//! arithmetic over `Q(q, u, v, w, a)`.

pub mod cartan;
pub mod cli;
pub mod currents;
pub mod error;
pub mod exact_algebra;
pub mod gauss;
pub mod qseries;
pub mod repv;
pub mod report;
pub mod rmatrix;
pub mod tensor;

pub use error::{AlgebraError, Result};
