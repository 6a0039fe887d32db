//! Exact periodic-point invariants for self-maps of wedge sums.
//!
//! Given the action of a continuous self-map on rational homology — per
//! summand and degree, as integer matrices — this crate computes Lefschetz
//! numbers of iterates, the Lefschetz zeta function, Dold coefficients and
//! algebraic periods, all in exact arbitrary-precision arithmetic. Reduction
//! formulas for permutative, squared-by-blocks maps run alongside the direct
//! definitions and are cross-checked against them. For wedges of tori the
//! crate also builds full graded actions out of first-homology matrices and
//! checks the cohomological obstruction that candidate matrices must satisfy
//! to come from a continuous map.

pub mod error;
pub mod invariants;
pub mod matrix;
pub mod numtheory;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod torus;
pub mod wedge;

pub use error::{CrossCheckError, InvariantsError, KernelError, WedgeError};
pub use matrix::Matrix;
pub use poly::IntPoly;
pub use ratfunc::RationalFunction;
pub use series::PowerSeries;
