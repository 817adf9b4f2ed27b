use thiserror::Error;

use crate::orbit::Shape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape (p={p}, q={q}, r={r}): need p >= 1, q >= 1, 0 <= r <= p + q")]
    InvalidShape { p: usize, q: usize, r: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid partial permutation pair: {0}")]
    InvalidMatrix(String),

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(Shape, Shape),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generator {generator} out of range for shape {shape}")]
    GeneratorOutOfRange { generator: String, shape: Shape },

    #[error("shape {0} has no simple reflections (p = q = 1)")]
    NoGenerators(Shape),

    #[error("cannot parse polynomial {0:?}")]
    PolyParse(String),

    #[error("unsupported field size {0}: use an odd prime among 3, 5, 7, 11, 13")]
    UnsupportedField(u32),

    #[error("enumeration budget exceeded: {needed} points > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error(
        "closure order is not graded: cover {lower} < {upper} has dims {lower_dim} -> {upper_dim}"
    )]
    GradingViolated {
        lower: usize,
        upper: usize,
        lower_dim: usize,
        upper_dim: usize,
    },

    #[error("closure order has {0} maximal elements, expected exactly one")]
    NoUniqueMaximum(usize),

    #[error("oracle consistency failure: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
