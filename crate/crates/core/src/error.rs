use thiserror::Error;

/// Errors raised by the library. Each variant maps to one CLI exit class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive")]
    Zero,

    #[error("{p} does not divide {n}")]
    NotADivisor { p: u64, n: u64 },

    #[error("divisibility failure at p = {p}: {value} is not a multiple of {p}")]
    Divisibility { p: u64, value: String },

    #[error("size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("automaton {automaton} is not locally monotone in input {input}")]
    NonMonotone { automaton: usize, input: usize },

    #[error("configuration {0:#b} is not recurrent at the given horizon")]
    NotRecurrent(u64),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
