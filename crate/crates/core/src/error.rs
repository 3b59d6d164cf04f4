use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle through element {0}")]
    Cycle(usize),

    #[error("element id {id} out of range for a poset on {n} elements")]
    Range { id: usize, n: usize },

    #[error("partition {0:?} is not strictly decreasing")]
    Strictness(Vec<usize>),

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("{what} limited to {cap}, got {got}")]
    Cap { what: &'static str, cap: usize, got: usize },

    /// `count` is a decimal string, prefixed by `>` when only a lower bound is known.
    #[error("{count} linear extensions exceed the degree cap {cap}")]
    DegreeCap { count: String, cap: usize },

    #[error("operator index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },

    #[error("tableau is not standard")]
    NotStandard,

    #[error("invalid tableau: {0}")]
    Shape(String),

    #[error("word is not a linear extension of the disjoint union: {0}")]
    Component(String),

    #[error("group order {order} is not divisible by degree {degree}")]
    Division { order: String, degree: usize },

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a linear extension: {0}")]
    NotExtension(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
