use thiserror::Error;

/// Errors raised while reading input or evaluating arrangement data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("invalid arrangement file: {0}")]
    InvalidFile(String),
    #[error("hyperplane {label} has an all-zero coefficient vector")]
    ZeroCoefficients { label: String },
    #[error("hyperplanes {first} and {second} define the same hyperplane")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("hyperplane {label} has {found} coefficients, expected {expected}")]
    DimensionMismatch {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("arrangement must contain at least one hyperplane")]
    EmptyArrangement,
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("hyperplane index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("unknown flat {0}")]
    UnknownFlat(usize),
    #[error("{0:?} is not a base of the arrangement")]
    NotABase(Vec<usize>),
    #[error("invalid supersolvable filtration: {0}")]
    InvalidFiltration(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("expected {expected} weights, found {found}")]
    WeightLength { expected: usize, found: usize },
    #[error("weights are resonant: {0}")]
    Resonant(String),
    /// A computed quantity contradicts a theorem that should hold for the
    /// given input. Always indicates a bug.
    #[error("inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable machine-readable tag for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedRational(_) => "malformed_rational",
            Error::InvalidFile(_) => "invalid_file",
            Error::ZeroCoefficients { .. } => "zero_coefficients",
            Error::DuplicateHyperplane { .. } => "duplicate_hyperplane",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::EmptyArrangement => "empty_arrangement",
            Error::ZeroDimension => "zero_dimension",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::UnknownFlat(_) => "unknown_flat",
            Error::NotABase(_) => "not_a_base",
            Error::InvalidFiltration(_) => "invalid_filtration",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::WeightLength { .. } => "weight_length",
            Error::Resonant(_) => "resonant",
            Error::Inconsistency(_) => "inconsistency",
        }
    }

    /// True for errors that signal a violated theorem rather than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
