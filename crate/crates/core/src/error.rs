use thiserror::Error;

/// Errors raised by the combinatorial operations.
///
/// `Falsified` is special: it means a structural claim that the code relies on
/// (exhaustive case split, single-term minimal part, nonzero witness image)
/// did not hold for some input. It is never expected and never swallowed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("malformed fcs word {0:?}: need a_j <= b_j with a and b strictly decreasing")]
    MalformedFcs(Vec<(i64, i64)>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted: {0}")]
    SearchExhausted(String),

    #[error("diagram window of {0} generators exceeds the normal-form table limit of {1}")]
    WindowTooWide(usize, usize),

    #[error("falsification event: {0}")]
    Falsified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
