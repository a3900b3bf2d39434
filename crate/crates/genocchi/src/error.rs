use thiserror::Error;

/// Errors reported by the exact kernels.
///
/// Several variants guard arithmetic facts (integrality, divisibility,
/// vanishing coefficients) that can only break if an upstream table or
/// recurrence was built incorrectly, so callers usually treat them as fatal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Reciprocal of a power series whose constant term is zero.
    #[error("series reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,

    /// A series coefficient that must vanish is nonzero.
    #[error("series has unexpected nonzero coefficient {value} at t^{power}")]
    SeriesShapeViolation { power: usize, value: String },

    /// A computation that must produce an integer produced a proper fraction.
    #[error("{context}: expected an integer, got {value}")]
    NonIntegerResult { context: &'static str, value: String },

    /// An exact divisibility guarantee failed.
    #[error("{context}: {value} is not divisible by {divisor}")]
    DivisibilityViolation {
        context: &'static str,
        value: String,
        divisor: String,
    },

    /// A rising-factorial expansion expected to vanish at z = 0 did not.
    #[error("rising-factorial representation has nonzero constant term {value}")]
    NonzeroConstantTerm { value: String },

    /// A custom coefficient sequence is shorter than the requested table needs.
    #[error("custom sequence prefix has {available} terms, need at least {required}")]
    PrefixTooShort { available: usize, required: usize },

    /// Identity registry lookup failed.
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    /// A summand contains a factorial of a negative argument and its triangle
    /// coefficient does not vanish, so the sum is undefined as written.
    #[error(
        "identity `{identity}`: factorial of a negative argument with nonzero \
         coefficient at (n={n}, m={m}, v={v})"
    )]
    NegativeFactorial {
        identity: &'static str,
        n: u32,
        m: u32,
        v: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
