use thiserror::Error;

/// Errors raised by the library.
///
/// Values are carried as `i128` so the type does not depend on the scalar
/// width in use.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,

    #[error("generator {0} is not a positive integer")]
    NonPositive(i128),

    #[error("generators have gcd {0}, so they do not generate a numerical semigroup")]
    NotCoprime(i128),

    #[error("multiplicity {0} is too large for an Apéry table")]
    MultiplicityTooLarge(i128),

    #[error("generator list {0:?} is not a minimal generating set")]
    NotMinimal(Vec<i128>),

    #[error("gluing precondition violated: {0}")]
    GluingPreconditionViolated(GluingViolation),

    /// A gluing produced a generator union that is not minimal. This
    /// contradicts the theory and is reported as an internal error.
    #[error("internal error: glued generator union {0:?} is not minimal")]
    GluingNotMinimal(Vec<i128>),

    #[error("order is not a permutation of the minimal generators")]
    NotAPermutation,

    #[error("argument outside the domain of {function}: {reason}")]
    DomainError {
        function: &'static str,
        reason: String,
    },

    #[error("invalid Frobenius number {0}: must be at least -1")]
    InvalidFrobenius(i128),

    #[error("element {element} has more than {limit} factorizations")]
    OracleTooLarge { element: i128, limit: usize },

    #[error("cache file: {0}")]
    Cache(String),
}

/// Which precondition of a gluing failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GluingViolation {
    NotCoprime,
    LeftFactorNotInRight,
    LeftFactorIsMinimalGenerator,
    RightFactorNotInLeft,
    RightFactorIsMinimalGenerator,
}

impl std::fmt::Display for GluingViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            GluingViolation::NotCoprime => "gcd(d1, d2) != 1",
            GluingViolation::LeftFactorNotInRight => "d1 is not an element of S2",
            GluingViolation::LeftFactorIsMinimalGenerator => "d1 is a minimal generator of S2",
            GluingViolation::RightFactorNotInLeft => "d2 is not an element of S1",
            GluingViolation::RightFactorIsMinimalGenerator => "d2 is a minimal generator of S1",
        };
        f.write_str(msg)
    }
}

impl Error {
    /// True for errors that signal a broken internal invariant rather than
    /// bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::GluingNotMinimal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
