use thiserror::Error;

/// Everything that can go wrong when building or analysing a finite semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("table not closed: entry ({row},{col}) = {value} is outside [0,{order})")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table not associative: ({i}*{j})*{l} != {i}*({j}*{l})")]
    NotAssociative { i: usize, j: usize, l: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("declared {kind} {element} does not behave as one")]
    BadMarker { kind: &'static str, element: usize },
    #[error("semigroup is not inverse")]
    NotInverse,
    #[error("semigroup has no zero")]
    NoZero,
    #[error("element {0} is not regular")]
    NotRegular(usize),
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("factor {0} is not a monoid")]
    NotAMonoid(usize),
    #[error("summand {0} is the trivial semigroup {{0}}")]
    TrivialSummand(usize),
    #[error("not a congruence: {a} ~ {b} but their translates by {c} are separated")]
    NotACongruence { a: usize, b: usize, c: usize },
    #[error("not an ideal: {element} in the set but {product} = product with {by} is not")]
    NotAnIdeal {
        element: usize,
        by: usize,
        product: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("automorphism search exceeded the node budget of {limit}")]
    SearchBudgetExceeded { limit: u64 },
    #[error("tuple space of size {size} exceeds the limit {limit}")]
    TupleSpaceTooLarge { size: u128, limit: u64 },
    #[error("not an action: {law} fails at {witness}")]
    NotAnAction { law: &'static str, witness: String },
    #[error("invalid McAlister triple: {axiom} ({witness})")]
    InvalidTriple { axiom: &'static str, witness: String },
    #[error("summand {0} is not completely 0-simple")]
    SummandNotCompletely0Simple(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
