use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The weight has a negative entry, or more nonzero odd components than
    /// the last even component allows.
    #[error("not covariant: {0}")]
    NotCovariant(String),

    /// A block of the weight is not weakly decreasing.
    #[error("not dominant: {0}")]
    NotDominant(String),

    /// An enumeration exceeded the configured cap on basis vectors.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A pattern pair violates betweenness or does not describe a tableau.
    #[error("inconsistent pattern: {0}")]
    InconsistentPattern(String),

    /// A generator move was requested whose target is not a valid supertableau.
    #[error("invalid target: {0}")]
    InvalidTarget(String),

    /// A coefficient denominator vanished. This indicates a bug: denominators
    /// are nonzero for every admissible move.
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    /// A gl_m weight mu outside 0 <= lambda_i - mu_i <= n was supplied.
    #[error("multiplicity bound violated: {0}")]
    MultiplicityBoundViolated(String),

    /// The tensor-power oracle would exceed its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// The oracle found no highest vector of the requested weight.
    #[error("no highest vector: {0}")]
    NoHighestVector(String),
}

pub type Result<T> = std::result::Result<T, Error>;
