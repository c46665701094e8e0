use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Source position inside a fixture file (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("element does not belong to the group")]
    ForeignElement,
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("enumeration budget of {budget} elements exceeded")]
    BudgetExceeded { budget: usize },
    #[error("malformed group specification: {0}")]
    MalformedSpec(String),
    #[error("empty commutator sequence")]
    EmptySequence,
    #[error("subgroup or automorphism belongs to a different group")]
    MismatchedParent,
    #[error("group of order {order} is not a {p}-group")]
    NotAPGroup { order: usize, p: u64 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("quotient D_{degree}/D_{next} is not elementary abelian", next = degree + 1)]
    NonElementaryQuotient { degree: usize },
    #[error("bracket of basis elements {left} and {right} depends on the coset representatives")]
    BracketNotWellDefined { left: usize, right: usize },
    #[error("element belongs to a different Lie algebra")]
    MismatchedAlgebra,
    #[error("element has trivial image in the graded algebra")]
    TrivialImage,
    #[error("automorphism does not induce a well-defined map on component {degree}")]
    ActionNotWellDefined { degree: usize },
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("automorphism is not an involution")]
    NotInvolution,
    #[error("evaluation budget exceeded: {0}")]
    OutOfBudget(String),
    #[error("unbound variable x{0}")]
    UnboundVariable(usize),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("unknown check `{name}`; known checks: {catalog}")]
    UnknownCheck { name: String, catalog: String },
    #[error("{location}: syntax error: {message}")]
    Syntax { location: Location, message: String },
    #[error("{location}: unresolved reference `{name}`")]
    UnresolvedReference { location: Location, name: String },
    #[error("{location}: duplicate name `{name}`")]
    DuplicateName { location: Location, name: String },
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
}
