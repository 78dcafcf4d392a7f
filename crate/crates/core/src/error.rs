use thiserror::Error;

/// Errors produced anywhere in the synthesis stack.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("width {0} is outside the supported range 1..={max}", max = crate::perm::MAX_WIDTH)]
    InvalidWidth(u32),

    #[error("table has {got} entries, expected {expected}")]
    TableLength { expected: usize, got: usize },

    #[error("value {value} at index {index} is out of range for width {width}")]
    ValueOutOfRange { index: usize, value: u32, width: u32 },

    #[error("not reversible: value {value} appears at rows {first} and {second}")]
    NotReversible { value: u32, first: usize, second: usize },

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: u32, right: u32 },

    #[error("width {width} exceeds the simulation limit {limit}")]
    SimulationCapacity { width: u32, limit: u32 },

    #[error("invalid operand: {0}")]
    InvalidOperand(String),

    #[error("gate with {controls} controls is not supported by the LNN cost model")]
    UnsupportedForLnn { controls: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no conjugating circuit found: {0}")]
    Unreachable(String),

    #[error("synthesis exceeded the time limit of {0:.3} s")]
    Timeout(f64),

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
