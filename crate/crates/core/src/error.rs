use core::fmt;

/// Errors raised by the core kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word that is not a bijection on `1..=n`.
    NotAPermutation,
    /// `inflate` was given a different number of blocks than the pattern length.
    InflationArity { expected: usize, got: usize },
    /// `inflate` was given an empty block.
    EmptyBlock(usize),
    /// Division by a series whose constant term is not invertible.
    NonUnitConstant,
    /// Square root of a series whose constant term is not 1.
    SqrtConstantTerm,
    /// A continued fraction too shallow for the requested truncation order.
    InsufficientDepth { needed: usize, available: usize },
    /// Truncations at consecutive depths disagree below the requested order.
    DepthUnstable { order: usize },
    /// Even/odd contraction requires unit partial denominators.
    NonUnitDenominator(usize),
    /// Exact division by `z` when the constant coefficient is nonzero.
    PoleDoesNotCancel,
    /// A coefficient that must be an integer polynomial is not.
    NotIntegral { index: usize },
    /// Parity checks are only stated for `n = 2^m - 1`.
    NotMersenne(usize),
    /// Fixed-point analysis requires odd `n` and even `k`.
    FixedPointParity { n: usize, k: usize },
    /// The brute-force and constructive fixed-point sets differ.
    FixedPointMismatch { n: usize, k: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation => write!(f, "word is not a permutation of 1..n"),
            Error::InflationArity { expected, got } => {
                write!(f, "inflation needs {expected} blocks, got {got}")
            }
            Error::EmptyBlock(i) => write!(f, "inflation block {i} is empty"),
            Error::NonUnitConstant => write!(f, "divisor has a non-invertible constant term"),
            Error::SqrtConstantTerm => write!(f, "square root needs constant term 1"),
            Error::InsufficientDepth { needed, available } => write!(
                f,
                "continued fraction depth {available} is below the required {needed}"
            ),
            Error::DepthUnstable { order } => write!(
                f,
                "continued fraction truncations disagree below order {order}"
            ),
            Error::NonUnitDenominator(i) => {
                write!(
                    f,
                    "partial denominator {i} is not 1; contraction needs unit denominators"
                )
            }
            Error::PoleDoesNotCancel => {
                write!(f, "constant coefficient is nonzero; cannot divide by z")
            }
            Error::NotIntegral { index } => {
                write!(f, "coefficient of z^{index} is not an integer polynomial")
            }
            Error::NotMersenne(n) => write!(f, "{n} is not of the form 2^m - 1"),
            Error::FixedPointParity { n, k } => {
                write!(f, "fixed points need odd n and even k (got n={n}, k={k})")
            }
            Error::FixedPointMismatch { n, k } => write!(
                f,
                "brute-force and constructive fixed points differ at n={n}, k={k}"
            ),
        }
    }
}
