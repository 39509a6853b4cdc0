use std::fmt;

use serde::Serialize;

/// Why a function falls outside a model class.
///
/// A reject is an answer, not a failure: every minimizer in this crate is
/// partial and reports which structural property ruled the input out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reject {
    NotMonotone,
    NotUnate,
    Indecomposable,
    Constant,
    NotAffine,
    NoDecisionList,
    IndistinguishablePoints,
    NoMuBp,
    NoNegationFreeForm,
}

impl Reject {
    pub fn as_str(self) -> &'static str {
        match self {
            Reject::NotMonotone => "not-monotone",
            Reject::NotUnate => "not-unate",
            Reject::Indecomposable => "indecomposable",
            Reject::Constant => "constant",
            Reject::NotAffine => "not-affine",
            Reject::NoDecisionList => "no-decision-list",
            Reject::IndistinguishablePoints => "indistinguishable-points",
            Reject::NoMuBp => "no-mu-bp",
            Reject::NoNegationFreeForm => "no-negation-free-form",
        }
    }
}

impl fmt::Display for Reject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("table length {0} is not a power of two >= 2")]
    BadLength(usize),
    #[error("illegal character {0:?} in table text")]
    BadChar(char),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what}: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("variable index {index} out of range for n = {n}")]
    VarOutOfRange { index: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("rejected: {0}")]
    Reject(Reject),
}

impl Error {
    pub fn reject(&self) -> Option<Reject> {
        match self {
            Error::Reject(r) => Some(*r),
            _ => None,
        }
    }
}

impl From<Reject> for Error {
    fn from(r: Reject) -> Self {
        Error::Reject(r)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
