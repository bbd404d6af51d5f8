use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a permutation needs at least one letter")]
    Empty,
    #[error("value {0} occurs more than once")]
    DuplicateValue(usize),
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("cycle word must start with 1, found {0}")]
    NotAnchored(usize),
    #[error("permutation is not a single n-cycle")]
    NotCyclic,
    #[error("pattern {0} is listed more than once")]
    DuplicatePattern(String),
    #[error("n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid range {from}..={to}")]
    InvalidRange { from: usize, to: usize },
    #[error("invalid position {position} for n = {n}: {reason}")]
    InvalidPosition {
        position: usize,
        n: usize,
        reason: &'static str,
    },
    #[error("word {word} is outside the domain of {map}: {reason}")]
    DomainViolation {
        map: &'static str,
        word: String,
        reason: String,
    },
    #[error("{family} is only defined for n >= {min}, got {n}")]
    BelowRange {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid tau {tau}: {reason}")]
    InvalidTau { tau: String, reason: &'static str },
    #[error("parse error: {0}")]
    Parse(String),
}
