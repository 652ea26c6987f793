use thiserror::Error;

/// Errors produced by evaluators, checks and bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("range error in {func}: {detail}")]
    Range { func: &'static str, detail: String },

    #[error("{func} overflowed at argument {arg}")]
    Overflow { func: &'static str, arg: f64 },

    #[error("{func} did not converge within {terms} terms")]
    NonConvergence { func: &'static str, terms: usize },

    #[error("hypothesis of {claim} violated: {detail}")]
    Hypothesis { claim: String, detail: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("no sign change of {func} on [{lo}, {hi}]")]
    Bracket {
        func: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(func: &'static str, detail: impl Into<String>) -> Result<T> {
    Err(Error::Domain {
        func,
        detail: detail.into(),
    })
}

pub(crate) fn range<T>(func: &'static str, detail: impl Into<String>) -> Result<T> {
    Err(Error::Range {
        func,
        detail: detail.into(),
    })
}
