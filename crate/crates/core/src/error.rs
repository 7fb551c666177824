use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph with {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("not a subgraph: {0}")]
    NotSubgraph(String),

    #[error("graph has {n_vertices} vertices, above the eigensolver cap of {cap}")]
    Capacity { n_vertices: usize, cap: usize },

    #[error("no closed-form spectrum for {0}; use the numeric path")]
    NoClosedForm(String),

    #[error("invalid spectrum: eigenvalue {value} at index {index} is below the clamp tolerance")]
    InvalidSpectrum { index: usize, value: f64 },

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(usize, usize),

    #[error("LEL of the reference graph is zero")]
    DegenerateLel,

    #[error("invalid quadrature grid: {0}")]
    InvalidGrid(String),

    #[error("unknown lattice family `{0}` (expected square, hex, j312, tkl or m3342)")]
    UnknownFamily(String),

    #[error("unknown boundary `{0}` (expected torus, cyl or free)")]
    UnknownBoundary(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
