use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum TwoScaleError {
    /// A value violates a documented precondition (wrong lattice vector,
    /// empty truncation set, mismatched grids, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical procedure failed or detected an inconsistency
    /// (eigensolver breakdown, diverging Chebyshev moments, ...).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Configuration rejected at parse or validation time.
    #[error("config error: {0}")]
    Config(String),

    /// An effective model is not applicable at the requested point
    /// (degenerate band, missing oscillator frequency, ...).
    #[error("model not applicable: {0}")]
    Inapplicable(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl TwoScaleError {
    pub fn domain(msg: impl Into<String>) -> Self {
        Self::Domain(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Self::Numeric(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Self::Config(msg.into())
    }
    pub fn inapplicable(msg: impl Into<String>) -> Self {
        Self::Inapplicable(msg.into())
    }
}
