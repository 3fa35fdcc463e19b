use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: duplicate alternative '{label}'")]
    DuplicateAlternative { line: usize, label: String },

    #[error("line {line}: unknown alternative '{label}'")]
    UnknownLabel { line: usize, label: String },

    #[error("line {line}: missing '|' acceptability bar")]
    MissingBar { line: usize },

    #[error("line {line}: expected {expected} voters, found {found}")]
    VoterCountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("invalid alternatives: {0}")]
    InvalidAlternatives(String),

    #[error("invalid preference-approval: {0}")]
    InvalidPreference(String),

    #[error("invalid presentation order: {0}")]
    InvalidOrder(String),

    #[error("dimension mismatch: expected {expected} alternatives, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length mismatch: expected {expected} voters, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ballot of voter {voter} is empty")]
    EmptyBallot { voter: usize },

    #[error("no preference-approval yields an empty ballot")]
    EmptyTarget,

    #[error("rule '{rule}' produced an empty outcome")]
    EmptyOutcome { rule: String },

    #[error("enumeration needs {required} steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("invalid rule: {0}")]
    InvalidRule(String),

    #[error("invalid planner preference: {0}")]
    InvalidPlannerPreference(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown case '{0}'")]
    UnknownCase(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
