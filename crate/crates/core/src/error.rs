use thiserror::Error;

/// How a failure should be reported to a caller such as the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input: malformed data, wrong handles, unknown names.
    Usage,
    /// The input is well formed but violates a mathematical hypothesis.
    Hypothesis,
    /// A computed object contradicts a theorem; this is a bug.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("objects live in different groups")]
    HandleMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not coprime to {1}")]
    NotCoprime(i64, u64),
    #[error("not an irreducible character")]
    NotIrreducible,
    #[error("not a genuine character")]
    NotGenuineCharacter,
    #[error("character is not invariant: {0}")]
    NotInvariant(String),
    #[error("quotient is not cyclic")]
    NotCyclic,
    #[error("form undefined: commutator [{0},{1}] is not in L")]
    FormUndefined(usize, usize),
    #[error("stabilizer mismatch: {0}")]
    StabilizerMismatch(String),
    #[error("not a chief factor: {0}")]
    NotChief(String),
    #[error("not semi-invariant: witness element {0}")]
    NotSemiInvariant(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("|N| is even; the correspondence is only defined for odd |N| (Q8 with C3 is a counterexample)")]
    EvenOrder,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("no canonical magic character")]
    NoneCanonical,
    #[error("{0} canonical magic characters")]
    MultipleCanonical(usize),
    #[error("not unique: {0}")]
    NonUnique(String),
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("not a perfect matching: {0}")]
    NotAMatching(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            NonAssociative(..)
            | NoIdentity
            | NoInverse(_)
            | MalformedTable(_)
            | InvalidPermutation(_)
            | OrderCapExceeded { .. }
            | UnknownCatalogEntry(_)
            | InvalidAction(_)
            | HandleMismatch
            | Parse(_) => ErrorClass::Usage,
            NonUnique(_) | NotBijective(_) | NotAMatching(_) | TheoremViolation(_)
            | NoneCanonical | MultipleCanonical(_) => ErrorClass::Internal,
            _ => ErrorClass::Hypothesis,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn theorem(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(msg.into())
}

pub(crate) fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisViolated(msg.into())
}
