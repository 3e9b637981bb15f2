use num_bigint::BigUint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: notation, spec documents, records.
    Input,
    /// An enumeration or search would exceed its configured budget.
    Budget,
    /// A mathematical precondition does not hold for the given data.
    Precondition,
    /// I/O and serialization failures.
    Io,
    /// An internal cross-check failed. Always a bug.
    Internal,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported base field size q = {0} (supported: 2, 3, 9)")]
    UnsupportedField(u32),
    #[error("digit {digit} out of range for GF({order})")]
    DigitOutOfRange { digit: u32, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("malformed polynomial notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("expansion has {len} coefficients, more than the allowed {max}")]
    TooLong { len: usize, max: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("g(x) does not divide x^{n}-1")]
    GNotDivisor { n: usize },
    #[error("x^{n}-1 has repeated roots in characteristic {p}")]
    RepeatedRoots { n: usize, p: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("generator matrix has rank {rank} but {rows} rows")]
    NotFullRank { rank: usize, rows: usize },
    #[error("enumeration needs {required} messages but the budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u128 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("MacWilliams transform failed: {0}")]
    MacWilliams(String),
    #[error("code coincides with its Hermitian dual, no vectors outside it")]
    SelfDual,
    #[error("code is not Hermitian self-orthogonal")]
    NotSelfOrthogonal,
    #[error("extension vector for side {side} is not in the Hermitian dual of C_{side}")]
    NotInDual { side: u8 },
    #[error("extension vector for side {side} has self-product digit {found}, rule {rule} rejects it")]
    WrongSelfProduct { side: u8, found: u8, rule: String },
    #[error("this construction requires q > 2")]
    WrongFieldSize,
    #[error("extension coefficient alpha must be nonzero")]
    ZeroAlpha,
    #[error("no qualifying extension vector in the Hermitian dual of C_{side}")]
    NoExtensionVector { side: u8 },
    #[error("f(x) is not coprime to x^n-1")]
    NotCoprime,
    #[error(
        "maximal-entanglement conditions not met (H1 H1^dag nonsingular: {h1h1_nonsingular}, 1 not an eigenvalue of P: {one_not_eigenvalue})"
    )]
    ConditionsNotMet { h1h1_nonsingular: bool, one_not_eigenvalue: bool },
    #[error("{count} divisor combinations exceed the limit {limit}")]
    TooManyDivisors { count: u128, limit: u128 },
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("line {line}: {reason}")]
    Record { line: usize, reason: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            UnsupportedField(_) | DigitOutOfRange { .. } | Parse { .. } | TooLong { .. } | Spec(_)
            | Record { .. } | FieldMismatch | Shape(_) => ErrorKind::Input,
            BudgetExceeded { .. } | TooManyDivisors { .. } => ErrorKind::Budget,
            Io(_) | Json(_) => ErrorKind::Io,
            Inconsistent(_) | MacWilliams(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            UnsupportedField(_) => "unsupported-field",
            DigitOutOfRange { .. } => "digit-out-of-range",
            DivisionByZero => "division-by-zero",
            FieldMismatch => "field-mismatch",
            Parse { .. } => "parse-error",
            TooLong { .. } => "too-long",
            InexactDivision => "inexact-division",
            GNotDivisor { .. } => "g-not-divisor",
            RepeatedRoots { .. } => "repeated-roots",
            Singular => "singular-matrix",
            Shape(_) => "shape-mismatch",
            NotFullRank { .. } => "not-full-rank",
            BudgetExceeded { .. } => "budget-exceeded",
            ZeroCode => "zero-code",
            MacWilliams(_) => "macwilliams",
            SelfDual => "self-dual",
            NotSelfOrthogonal => "not-self-orthogonal",
            NotInDual { .. } => "not-in-dual",
            WrongSelfProduct { .. } => "wrong-self-product",
            WrongFieldSize => "wrong-field-size",
            ZeroAlpha => "zero-alpha",
            NoExtensionVector { .. } => "no-extension-vector",
            NotCoprime => "f-not-coprime",
            ConditionsNotMet { .. } => "conditions-not-met",
            TooManyDivisors { .. } => "too-many-divisors",
            Spec(_) => "spec-error",
            Record { .. } => "record-error",
            Inconsistent(_) => "inconsistent",
            Io(_) => "io-error",
            Json(_) => "json-error",
        }
    }
}
