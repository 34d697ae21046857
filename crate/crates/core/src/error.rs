use thiserror::Error;

/// Errors raised by the exact-arithmetic, combinatorics and measure routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A factor with a negative exponent vanishes at the evaluation point.
    #[error("pole at evaluation point")]
    PoleAtPoint,
    /// A zero linear form was multiplied into a factored product.
    #[error("zero linear form cannot enter a factored product")]
    ZeroFactor,
    /// Laurent polynomials over different numbers of variables were combined.
    #[error("axes mismatch: {0} vs {1}")]
    AxesMismatch(usize, usize),
    /// A power series has the wrong constant term for the requested operation.
    #[error("bad constant term for {0}")]
    BadConstantTerm(&'static str),
    /// A Laurent polynomial that must be constant-term free is not.
    #[error("constant term present")]
    ConstantTermPresent,
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// The cell does not belong to the partition.
    #[error("cell ({0}, {1}) is not in the partition")]
    CellNotInPartition(usize, usize),
    /// Corner index outside `1..=m`.
    #[error("corner index {index} out of range 1..={m}")]
    BadCornerIndex {
        /// Requested index.
        index: usize,
        /// Number of true inside corners.
        m: usize,
    },
    /// Parts are not a weakly decreasing list of positive integers.
    #[error("invalid partition")]
    InvalidPartition,
    /// A box set or height array is not downward closed.
    #[error("invalid plane partition")]
    InvalidPlanePartition,
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
