//! Error type shared by all modules.

use thiserror::Error;

/// Contract and validation failures surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A payoff matrix does not match its action lists, or a strategy
    /// vector does not match an action count.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Game construction rejected the inputs (non-finite payoff, ragged
    /// matrix, duplicate action label, ...).
    #[error("invalid game: {0}")]
    InvalidGame(String),

    /// A probability vector had a negative entry or did not sum to one.
    #[error("invalid mixed strategy: {0}")]
    InvalidDistribution(String),

    /// A 2×2-only operation was called on a game of a different size.
    #[error("operation requires a 2x2 game, got {rows}x{cols}")]
    NotTwoByTwo { rows: usize, cols: usize },

    /// An ESS check was requested for a game whose column payoffs are not
    /// the transpose of its row payoffs.
    #[error("ESS check requires a symmetric game")]
    AsymmetricGame,

    /// A persistence time or other quantity that must be nonnegative was
    /// negative.
    #[error("negative persistence time {0}")]
    NegativePersistence(f64),

    /// A parameter failed its domain restriction.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The zero-profit condition has no finite producer count because the
    /// per-period cost of staying in the market is zero.
    #[error("unbounded entry: zero-profit condition has no finite solution when c + D = 0")]
    UnboundedEntry,

    /// The infinite monopoly tail does not converge for a discount factor
    /// at or above one.
    #[error("divergent tail: discount factor {0} >= 1 gives the monopoly phase infinite value")]
    DivergentTail(f64),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
