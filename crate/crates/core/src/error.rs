use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..={max}")]
    VertexCount { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("operands act on {left} and {right} qubits")]
    LengthMismatch { left: usize, right: usize },

    #[error("error weight t={t} exceeds vertex count {n}")]
    WeightTooLarge { t: usize, n: usize },

    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("census line {line}: {source}")]
    Census {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("LC orbit exceeded the cap of {cap} isomorphism classes")]
    OrbitTooLarge { cap: usize },

    #[error("transform engine needs 4^{n} entries (cap n <= {cap}); use the direct engine")]
    TransformTooLarge { n: usize, cap: usize },

    #[error("{what} supports at most {max} vertices, got {n}")]
    TooManyVertices {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("{0} is not available for this engine")]
    EngineUnsupported(&'static str),

    #[error("no closed form for {0}")]
    UnsupportedFamily(String),

    #[error("invalid family spec {spec:?}: {reason}")]
    FamilySpec { spec: String, reason: String },

    #[error("invalid Pauli string {input:?}: {reason}")]
    PauliParse { input: String, reason: String },

    #[error("invalid fraction {0:?}")]
    FractionParse(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("channel is not trace preserving (residual {residual:e})")]
    NotTracePreserving { residual: f64 },

    #[error("projector and coefficient assemblies of the Bell operator differ by {distance:e}")]
    AssemblyMismatch { distance: f64 },

    #[error("census graphs have mixed vertex counts ({expected} and {got})")]
    MixedCensus { expected: usize, got: usize },

    #[error("checkpoint {path}: {reason}")]
    Checkpoint { path: PathBuf, reason: String },

    #[error("witness {graph6} does not attain the reported bound on re-verification")]
    WitnessMismatch { graph6: String },

    #[error("labeled enumeration is limited to n <= {max}; supply a graph6 census file for n={n}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("missing census file for n={0}")]
    MissingCensus(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
