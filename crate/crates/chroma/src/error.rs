use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants are grouped by how callers are expected to react: `Parse` means
/// the input text is bad, the precondition variants mean the input object is
/// outside an operation's domain, the cap variants mean a configured resource
/// limit stopped an otherwise valid computation, and `Invariant` means an
/// internal cross-check failed (always a bug, never expected on valid input).
#[derive(Debug, Error)]
pub enum Error {
    #[error("monomials belong to different variable registries")]
    RegistryMismatch,

    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),

    #[error("{denominator} does not divide {numerator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation undefined for the unit ideal (a generator is 1)")]
    UnitIdeal,

    #[error("ideal is not squarefree ({witness} has exponent {exponent}); polarize it first")]
    NotSquarefree { witness: String, exponent: u32 },

    #[error("ideal is not dominant: generator {generator} has no dominating variable")]
    NotDominant { generator: String },

    #[error("no complete intersection of size {codim} among the generators")]
    NoCompleteIntersection { codim: usize },

    #[error("invalid hint: {0}")]
    InvalidHint(String),

    #[error("invalid clique cover: {0}")]
    InvalidCover(String),

    #[error("generator index {index} out of range (ideal has {count} generators)")]
    GeneratorIndex { index: usize, count: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexRange { vertex: u32, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("{0}")]
    Precondition(String),

    #[error("no pair assignment with disjoint color classes exists for k = {k}; \
             three mutually intersecting pairs cannot share two colors")]
    EvenCaseImpossible { k: usize },

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("clique {clique} would need {needed} shared vertices but has only {slots} slots")]
    SlotOverflow {
        clique: usize,
        needed: usize,
        slots: usize,
    },

    #[error("subset enumeration over {others} non-intersection generators exceeds cap {cap}")]
    SubsetCap { others: usize, cap: usize },

    #[error("graph with {n} vertices exceeds the {what} cap {cap}")]
    SizeCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
