use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty vertex id")]
    EmptyId,
    #[error("vertex id `star` is reserved for the extra quiver vertex")]
    ReservedId,
    #[error("duplicate vertex id: {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("invalid dual graph: {0}")]
    InvalidGraph(String),
    #[error("cycle keys do not match the vertex set of the graph")]
    KeyMismatch,
    #[error("expected an integer for vertex {vertex}, found {value}")]
    NonIntegral { vertex: String, value: String },
    #[error("singular linear system")]
    Singular,
    #[error("unsupported diagram shape: {0}")]
    UnsupportedShape(String),
    #[error("vertex {0} is a (-1)-curve; the combinatorial rules need a minimal resolution")]
    NotMinimal(String),
    #[error("rule (3) does not apply: {0}")]
    RuleThreePrecondition(String),
    #[error("rule gives a negative arrow count: {0}")]
    NegativeCount(String),
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("malformed group spec `{0}` (expected A:r,a | D:n,q | T:m | O:m | I:m)")]
    BadGroupSpec(String),
    #[error("invalid translation quiver: {0}")]
    InvalidTranslationQuiver(String),
    #[error("start vertex {0} is not in the special set")]
    StartNotSpecial(String),
    #[error("no named special modules are known for {0}")]
    UnsupportedSpecials(String),
    #[error("knitting did not reach an all-zero layer within {steps} steps")]
    NonTermination {
        steps: usize,
        /// The lambda layers computed before giving up, indexed by step then vertex.
        trace: Vec<Vec<u64>>,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
