use thiserror::Error;

/// Everything that can go wrong in `hyperlap-core`.
///
/// Vertex identifiers carried by variants are 1-based, matching the file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge} has {found} distinct vertices, expected {expected}")]
    NonUniformEdge {
        edge: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge} duplicates an earlier edge")]
    DuplicateEdge { edge: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hypergraph has no edges")]
    TrivialHypergraph,
    #[error("uniformity k={k} is not supported (need k >= 3 and n >= k)")]
    UnsupportedUniformity { k: usize },
    #[error("graph edge {edge} is a loop or repeats an earlier edge")]
    NonSimpleGraph { edge: usize },
    #[error("invalid family parameter: {0}")]
    InvalidFamilyParameter(&'static str),
    #[error("odd-bipartiteness is only defined for even k (got k={k})")]
    OddUniformity { k: usize },
    #[error("operation requires odd k (got k={k})")]
    OddUniformityRequired { k: usize },
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector has a non-finite entry")]
    NonFinite,
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("no convergence after {iterations} iterations (bracket [{lower}, {upper}])")]
    MaxIterations {
        iterations: usize,
        lower: f64,
        upper: f64,
    },
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("hypergraph is not cored")]
    NotCored,
    #[error("power iterate lost strict positivity at iteration {iteration}")]
    NonPositiveIterate { iteration: usize },
    #[error(
        "even k requires an even number of -1 entries in each chosen edge; edge {edge} violates it"
    )]
    SignParityViolation { edge: usize },
    #[error("lambda={lambda} is not a root of f_{r} (|f|={value})")]
    WrongRootForR { lambda: f64, r: usize, value: f64 },
    #[error("expected {expected} chosen edges, got {found}")]
    ChoiceCountMismatch { expected: usize, found: usize },
    #[error("constructed eigenpair has residual {residual}")]
    CertificationFailed { residual: f64 },
    #[error("hypergraph is not a member of the expected family: {0}")]
    FamilyMismatch(&'static str),
    #[error("instance too large for the oracle (k*|E| = {size})")]
    InstanceTooLarge { size: usize },
    #[error("claim contradicted: certified eigenvalue {lambda} exceeds bound {bound}")]
    ClaimContradicted { lambda: f64, bound: f64 },
    #[error("invalid solver options: {0}")]
    InvalidOptions(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
