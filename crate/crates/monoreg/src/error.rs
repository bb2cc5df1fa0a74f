//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by ideal arithmetic, geometry, homology, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in polynomial rings with different variable counts.
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    /// The operation is undefined for the zero ideal.
    #[error("{op} is undefined for the zero ideal")]
    ZeroIdeal { op: &'static str },

    /// The operation is undefined for the unit ideal.
    #[error("{op} is undefined for the unit ideal")]
    UnitIdeal { op: &'static str },

    /// The operation requires an ideal generated in a single degree.
    #[error("{op} requires an equigenerated ideal")]
    NotEquigenerated { op: &'static str },

    /// The operation requires squarefree generators.
    #[error("{op} requires a squarefree monomial ideal")]
    NotSquarefree { op: &'static str },

    /// A variable index is outside the ambient ring.
    #[error("variable index {index} out of range for {ambient} variables")]
    VariableOutOfRange { index: usize, ambient: usize },

    /// Generator count exceeds a configured resource cap.
    #[error("{count} generators exceed the configured cap of {cap}")]
    GeneratorCap { count: usize, cap: usize },

    /// Field characteristic is neither zero nor prime.
    #[error("characteristic {0} is neither 0 nor prime")]
    BadCharacteristic(u64),

    /// The requested ambient dimension is unsupported by this operation.
    #[error("{op} requires ambient dimension {required}, found {found}")]
    WrongAmbient {
        op: &'static str,
        required: usize,
        found: usize,
    },

    /// A generator partition handed to a splitting check is not a partition.
    #[error("invalid generator partition: {reason}")]
    InvalidPartition { reason: &'static str },

    /// Layer-structure preconditions (layer count, condition set) are violated.
    #[error("layer structure: {reason}")]
    LayerStructure { reason: &'static str },

    /// Ideal text failed to parse.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A face set handed to `SimplicialComplex` is not closed under subsets.
    #[error("face set is not downward closed")]
    NotDownwardClosed,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
