use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("braid words need at least one strand")]
    NoStrands,
    #[error("destabilization needs exactly one occurrence of the top generator, found {found}")]
    DestabilizeInapplicable { found: usize },
    #[error("band indices must satisfy 1 <= i < j <= n, got i={i}, j={j}, n={n}")]
    BandIndices { i: usize, j: usize, n: usize },
    #[error("malformed braid word {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("reduced Burau representation needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error(
        "closure has {0} components; the single-variable Alexander polynomial is only computed for knots"
    )]
    NotAKnot(usize),
    #[error("zero polynomial has no v-breadth")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("f(n) is only defined for n >= 2, got {0}")]
    BraidIndexTooSmall(i64),
    #[error("-chi + b must be positive, got chi={chi}, b={b}")]
    NonPositiveComplexity { chi: i64, b: i64 },
    #[error("winding number must be non-negative, got {0}")]
    NegativeWinding(i64),
    #[error("cable parameter p must be at least 1, got {0}")]
    CableParameter(i64),
    #[error("a 2-braid foliation cannot carry ab-tiles (got r_ab={0})")]
    AbTilesOnTwoBraid(u64),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("enumeration of {requested} raw words exceeds the cap of {cap}")]
    BudgetExceeded { requested: u128, cap: u128 },
    #[error("invalid decision input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
