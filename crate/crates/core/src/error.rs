use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a matrix needs at least one row and one column")]
    EmptyMatrix,
    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("generators {0} and {1} coincide")]
    DuplicateGenerator(usize, usize),
    #[error("the semigroup is not positive: no functional is positive on every generator")]
    NotPositive,
    #[error("rank deficient input: {0}")]
    RankDeficient(String),
    #[error("vector does not lie in the rational span of the generators")]
    OutsideSpan,
    #[error("vector does not lie in the group generated by the generators")]
    OutsideLattice,
    #[error("vector does not lie in the cone spanned by the generators")]
    OutsideCone,
    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("weights of a {0} order must be {1}")]
    InvalidWeight(&'static str, &'static str),
    #[error("weight does not fit the integer range used for order comparisons")]
    WeightOverflow,
    #[error("the basis was computed for a different weight")]
    WeightMismatch,
    #[error("generator set {0:?} is not a face of the umbrella")]
    NotAFace(Vec<usize>),
    #[error("facets read off the Gröbner basis {groebner:?} differ from the hull facets {hull:?}")]
    FacetMismatch {
        groebner: Vec<Vec<usize>>,
        hull: Vec<Vec<usize>>,
    },
    #[error("iteration cap of {0} rounds reached without emptying the queue")]
    IterationCap(usize),
    #[error("rank {0} is below 2")]
    RankTooSmall(usize),
    #[error("exponent or multiplier too large: {0}")]
    TooLarge(String),
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;
