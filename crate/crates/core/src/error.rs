use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("{what} is not contained in {of}")]
    NotSubgroup { what: String, of: String },

    #[error("coset index {index} exceeds the bound {bound}")]
    IndexTooLarge { index: u128, bound: u128 },

    #[error("the pair set is not invariant under the group")]
    NotInvariant,

    #[error("{group} does not preserve {design}: generator {generator} maps block {block} outside the block list")]
    DesignNotPreserved {
        group: String,
        design: String,
        generator: usize,
        block: usize,
    },

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("order mismatch for {label}: expected {expected}, stabilizer chain gives {found}")]
    OrderMismatch {
        label: String,
        expected: u128,
        found: u128,
    },

    #[error("{label}: expected a {expected}-transitive action, found {found}-transitive")]
    TransitivityMismatch {
        label: String,
        expected: usize,
        found: usize,
    },

    #[error("{label}: expected {expected}, found {found}")]
    ExpectationMismatch {
        label: String,
        expected: String,
        found: String,
    },

    #[error("data file {0} is missing")]
    MissingData(String),

    #[error("fast verification refused: {0}")]
    FastRefused(String),

    #[error("construction condition ({condition}) fails: {detail}")]
    ConstructionCondition { condition: char, detail: String },

    #[error("code invariant violated: {0}")]
    CodeInvariant(String),

    #[error("{pairs} ordered pairs exceed the brute-force bound {bound}")]
    PairBound { pairs: usize, bound: usize },

    #[error("fast and brute verification disagree on {0}")]
    MethodsDisagree(String),

    #[error("search bound exceeded: {0}")]
    SearchBound(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
