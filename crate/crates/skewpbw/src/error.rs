use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    RingMismatch,
    NotInvertible,
    DivisionByZero,
    MissingGeneratorImage,
    MissingInverse,
    EndoCheckFailed(String),
    AlgebraInvalid(String),
    AlgebraMismatch,
    RankMismatch,
    ArityMismatch,
    ZeroGenerator,
    SubsetCapExceeded { cap: usize, needed: usize },
    Parse { line: usize, col: usize, msg: String },
    ImaginaryUnitUnavailable,
    UnknownSymbol(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "coefficient ring mismatch"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::MissingGeneratorImage => write!(f, "endomorphism lacks an image for a generator"),
            Error::MissingInverse => write!(f, "endomorphism has no declared inverse"),
            Error::EndoCheckFailed(m) => write!(f, "endomorphism check failed: {m}"),
            Error::AlgebraInvalid(m) => write!(f, "invalid algebra: {m}"),
            Error::AlgebraMismatch => write!(f, "elements belong to different algebras"),
            Error::RankMismatch => write!(f, "module rank mismatch"),
            Error::ArityMismatch => write!(f, "exponent arity mismatch"),
            Error::ZeroGenerator => write!(f, "zero vector is not allowed as a generator"),
            Error::SubsetCapExceeded { cap, needed } => write!(
                f,
                "subset cardinality cap {cap} exceeded (basis needs subsets of size {needed})"
            ),
            Error::Parse { line, col, msg } => write!(f, "parse error at {line}:{col}: {msg}"),
            Error::ImaginaryUnitUnavailable => {
                write!(f, "imaginary unit is not available over Q")
            }
            Error::UnknownSymbol(s) => write!(f, "unknown symbol: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
