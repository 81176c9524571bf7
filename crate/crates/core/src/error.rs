//! Crate-wide error type.

use crate::scheme::Violation;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    // exact linear algebra
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix has non-integer entries")]
    NonIntegralEntries,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("irrational spectrum: a characteristic factor of degree {degree} has no integer root")]
    IrrationalSpectrum { degree: usize },

    // finite fields
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the 2^20 bound")]
    FieldTooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in a finite field")]
    ZeroInverse,

    // color matrices and schemes
    #[error("color matrix invariant broken: {0}")]
    BadColorMatrix(String),
    #[error("class index {index} out of range 1..={max}")]
    ClassIndexOutOfRange { index: usize, max: usize },
    #[error("scheme verification failed: {0}")]
    SchemeViolation(Box<Violation>),
    #[error("graph is disconnected (vertex {unreached} unreachable from {start})")]
    Disconnected { start: usize, unreached: usize },
    #[error("graph is not regular (degrees {d1} at {v1}, {d2} at {v2})")]
    Irregular { v1: usize, d1: u64, v2: usize, d2: u64 },
    #[error("graph is complete or empty; out of scope for strong regularity")]
    CompleteOrEmpty,

    // partitions and fusion
    #[error("invalid class partition: {0}")]
    BadPartition(String),
    #[error("too many classes for partition enumeration (d={d} > {max}); override to force")]
    TooManyClasses { d: usize, max: usize },
    #[error("schemes live on different vertex counts ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
    #[error("no common 2-class split found between the two schemes")]
    NoCommonSplit,
    #[error("common 2-class split is ambiguous; candidates: {0:?}")]
    AmbiguousSplit(Vec<(usize, usize)>),

    // decompositions
    #[error("edge ({x},{y}) covered by parts {first} and {second}")]
    OverlappingParts { x: usize, y: usize, first: usize, second: usize },
    #[error("edge ({x},{y}) not covered by any part")]
    UncoveredEdge { x: usize, y: usize },

    // spreads and cliques
    #[error("vertex count {0} is not a perfect square")]
    NotSquareVertexCount(usize),
    #[error("relation {0} is not a square spread")]
    NotASpread(usize),
    #[error("spread edge ({x},{y}) is not an edge of the host graph")]
    SpreadNotContained { x: usize, y: usize },
    #[error("clique does not induce a bijection: {0}")]
    CliqueNotBijection(String),
    #[error("clique pair ({x},{y}) is not an edge of the host graph")]
    CliqueNotInGraph { x: usize, y: usize },

    // classification
    #[error("parameters fail the strong-regularity identity k(k-1-l)=mu(v-1-k)")]
    BadSrgParams,
    #[error("hypothesis k=-a(n-1) fails for both n=+sqrt(v) and n=-sqrt(v)")]
    LemmaHypothesisFails,
    #[error("common eigenspace dimension {0} is not a nonnegative integer; no commuting pair exists")]
    InconsistentCommutingPair(String),
    #[error("relation does not have lattice parameters (n^2, 2(n-1), n-2, 2)")]
    NotLatticeParameters,

    // io
    #[error("{path}:{line}:{col}: {msg}")]
    Parse { path: String, line: usize, col: usize, msg: String },
    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },

    // guards
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("unsupported parameter: {0}")]
    BadParameter(String),

    // these indicate an implementation bug or a falsified theorem, not bad input
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("theorem falsified (implementation bug): {0}")]
    TheoremFalsified(String),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::SchemeViolation(Box::new(v))
    }
}
