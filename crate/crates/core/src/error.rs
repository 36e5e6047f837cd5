use alloc::string::String;

/// Errors raised by the algebra, sequence, character and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NonSquare { rows: usize, row: usize, len: usize },
    #[error("series variable {var} occurs with a negative exponent")]
    NegativeSeriesExponent { var: String },
    #[error("series constant term is not a nonzero rational")]
    NonUnitConstantTerm,
    #[error("variable {var} occurs with a negative exponent but its image is not an invertible monomial")]
    NonInvertibleImage { var: String },
    #[error("series operands disagree on series variables or precision cap")]
    SeriesMismatch,

    #[error("f_{n} is not monic")]
    NotMonic { n: usize },
    #[error("f_{n} has degree {found}, expected {n}")]
    WrongDegree { n: usize, found: usize },
    #[error("f_0 must be the constant polynomial 1")]
    F0NotOne,
    #[error("coefficient table is missing f_{n}")]
    MissingIndex { n: usize },
    #[error("f_{n} is requested but the sequence table stops at f_{available}")]
    IndexOutOfTable { n: i64, available: usize },
    #[error("f_-{n} must be a power series in 1/x of order exactly {n}")]
    NegativePartWrongOrder { n: usize },
    #[error("negative part of the sequence is missing or too short (need f_-{n} to 1/x-order {order})")]
    InsufficientNegativePart { n: usize, order: i64 },
    #[error("leading coefficient of f_-{n} is not an invertible rational")]
    NonInvertibleLeadingCoefficient { n: usize },

    #[error("weight has {len} parts but only {n} variables are available")]
    LengthExceedsN { len: usize, n: usize },
    #[error("exact signature characters need the factorial or monomial sequence; use truncated mode")]
    NegativePartsUnsupported,
    #[error("odd half-integer exponent survived the odd orthogonal division")]
    OddHalfExponentResidue,
    #[error("precision cap {cap} is too small, need at least {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
    #[error("not a weakly decreasing sequence: {0}")]
    InvalidWeight(String),

    #[error("even orthogonal Littlewood identity needs a constant-term free sequence")]
    NotConstantTermFree,
    #[error("signature split does not match p = {p}, q = {q}")]
    SplitMismatch { p: usize, q: usize },
    #[error("identity hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("the symplectic ½-determinant has a non-integral coefficient")]
    NotHIntegral,
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;
