use thiserror::Error;

/// Errors raised by code construction, geometry and orbit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is out of range 1..={max}", max = crate::coding::MAX_DIMENSION)]
    DimensionOutOfRange(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("digit {digit} at position {position} is out of range 1..={arity}")]
    DigitOutOfRange {
        digit: u64,
        position: usize,
        arity: u64,
    },

    #[error("axis digit {digit} on axis {axis} is out of range 0..=3")]
    AxisDigitOutOfRange { digit: u8, axis: usize },

    #[error("coordinate {value} on axis {axis} lies outside the unit interval")]
    CoordinateOutOfRange { value: String, axis: usize },

    #[error("cannot shift an order-0 code: the whole cube has no leading index")]
    ShiftEmptyCode,

    #[error(
        "orbit of {requested} steps exceeds the code order; at most {available} steps are usable"
    )]
    InsufficientDepth { requested: usize, available: usize },

    #[error("construction needs {required} digits but the limit is {limit}")]
    CapacityExceeded { required: usize, limit: usize },

    #[error("periodic block must be non-empty and repeated at least once")]
    EmptyBlock,

    #[error("enumeration of {required} items exceeds the configured budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    #[error("cannot parse {input:?} as {expected}")]
    Parse {
        input: String,
        expected: &'static str,
    },

    #[error("no separated partner digit exists for digit {digit}")]
    NoSeparatedDigit { digit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
