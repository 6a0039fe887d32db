//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the exact-arithmetic kernel (matrices, polynomials, series).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("iterates start at 1; m = 0 is not accepted")]
    ZeroIterate,
    #[error("degree {k} out of range for dimension {n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{op} requires constant term {expected}")]
    ConstantTermMustBe { op: &'static str, expected: i64 },
    #[error("not a perfect {index}-th power")]
    NotAPerfectPower { index: u64 },
}

/// Errors from assembling wedge-map homology data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WedgeError {
    #[error(
        "coordinate {from}->{to} has a {got_rows}x{got_cols} block in degree {degree}, expected {want_rows}x{want_cols}"
    )]
    DimensionMismatch {
        from: usize,
        to: usize,
        degree: usize,
        want_rows: usize,
        want_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("space {index} has betti[0] = {got}, but summands must be path-connected (betti[0] = 1)")]
    BadBaseDegree { index: usize, got: usize },
    #[error("coordinate grid is {got}x{got2}, expected {want}x{want}")]
    BadGridShape { want: usize, got: usize, got2: usize },
}

/// Errors from the torus-specific layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("candidate matrix is {got_rows}x{got_cols}, expected {want}x{want}")]
    ShapeMismatch {
        want: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("candidate matrix must have integer entries")]
    NotInteger,
}

/// Errors from the invariant engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("map is not permutative and squared by blocks; reduction formula does not apply")]
    NotApplicable,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A divergence between two formula paths that must always agree. This is
/// never expected; seeing one means a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cross-check failed in {context}: {detail}")]
pub struct CrossCheckError {
    pub context: &'static str,
    pub detail: String,
}
