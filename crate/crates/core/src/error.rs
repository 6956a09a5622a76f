use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to
/// reproduce the failing check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("element has negative valuation {valuation} and no residue mod pi")]
    NegativeValuation { valuation: String },

    #[error("expected a unit, found valuation {valuation}")]
    NotAUnit { valuation: String },

    #[error("log_L is undefined at 0")]
    ZeroArgument,

    #[error("(p+1) divides the omega2 exponent {c} for p={p}, k={k}")]
    IrreducibilityViolation { p: u64, k: u64, c: u64 },

    #[error("{id} is not defined for r={r}")]
    ParityMismatch { id: String, r: u64 },

    #[error("singular system")]
    Singular,

    #[error("{id} r={r}: component {component} solved as {solved}, expected {expected}")]
    Mismatch {
        id: String,
        r: u64,
        component: String,
        solved: String,
        expected: String,
    },

    #[error("{id} at {param}: lhs = {lhs}, rhs = {rhs}")]
    IdentityFailed {
        id: String,
        param: String,
        lhs: String,
        rhs: String,
    },

    #[error("WZ certificate fails at {detail}")]
    CertificateFailed { detail: String },

    #[error("operator {op} is not defined on weight {weight}")]
    WeightMismatch { op: String, weight: String },
}

pub type Result<T> = std::result::Result<T, Error>;
