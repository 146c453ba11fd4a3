use thiserror::Error;

/// Errors raised while parsing objects or applying the maps between them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at byte {index}")]
    InvalidChar { index: usize, ch: char },

    #[error("path leaves the band [{lo}, {hi}]: level {level} after {index} steps")]
    BandViolation {
        index: usize,
        level: i32,
        lo: i32,
        hi: i32,
    },

    #[error("invalid band [{lo}, {hi}]: expected lo <= 0 <= hi")]
    InvalidBand { lo: i32, hi: i32 },

    #[error("end level {end} lies outside the band [{lo}, {hi}]")]
    EndOutsideBand { end: i32, lo: i32, hi: i32 },

    #[error("unbalanced parentheses at byte {pos}")]
    UnbalancedParens { pos: usize },

    #[error("trailing input at byte {pos}")]
    TrailingInput { pos: usize },

    #[error("bad token {0:?}")]
    BadToken(String),

    #[error("not an Elena word: {0}")]
    NotElenaShaped(String),

    #[error("fibonacci index {0} is below -1")]
    OutOfRange(i64),

    #[error("no closed form for {0}")]
    FormulaUnavailable(String),

    #[error("{path:?} is not a member of {expected}")]
    NotInFamily { expected: String, path: String },

    #[error("tree of height {height} exceeds the maximum height {max}")]
    TooTall { height: usize, max: usize },

    #[error("the one-node tree has no Elena counterpart")]
    SingleNode,

    #[error("internal contract violated: {0}")]
    InternalContractViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
