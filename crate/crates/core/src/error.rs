use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence is not a Catalan tuple")]
    EmptyTuple,
    #[error("entries sum to {sum}, expected the length {length}")]
    WrongTotal { sum: usize, length: usize },
    #[error("partial sum through index {index} is {sum}, must exceed {index}")]
    BallotViolated { index: usize, sum: usize },
    #[error("partial sum index {index} out of range for tuple of length {length}")]
    IndexOutOfRange { index: usize, length: usize },
    #[error("tuple of length 0 has no factorization")]
    NoFactorization,
    #[error("table needs at least {expected} pockets, got {actual}")]
    TooFewPockets { expected: usize, actual: usize },
    #[error("length tuple {lengths:?} is not a Catalan tuple: {reason}")]
    InvalidLengthTuple { lengths: Vec<usize>, reason: String },
    #[error("zeroth pocket is (0): no lozenge decomposition")]
    NoLozengeDecomposition,
    #[error("first pocket is (0) or missing: no black-lozenge decomposition")]
    NoBlackLozengeDecomposition,
    #[error("{what} {k} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        k: usize,
        limit: usize,
    },
    #[error("pocket {0} is a leaf and has no rows")]
    LeafPocket(usize),
    #[error("pocket index {index} out of range ({count} pockets)")]
    NoSuchPocket { index: usize, count: usize },
    #[error("pocket tree sides are not labeled")]
    UnlabeledTree,
    #[error("number of points must be even and at least 2, got {0}")]
    BadPointCount(usize),
    #[error("eigenvalues at indices {0} and {1} coincide")]
    CoincidentEigenvalues(usize, usize),
    #[error("no eigenvalue for index {0}")]
    MissingEigenvalue(usize),
    #[error("no two-point value for pair ({0}, {1})")]
    MissingTwoPoint(usize, usize),
    #[error("two-point values for ({0}, {1}) and ({1}, {0}) differ")]
    AsymmetricTwoPoint(usize, usize),
    #[error("zero denominator E_{0} - E_{1}")]
    ZeroDenominator(usize, usize),
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T> = std::result::Result<T, Error>;
