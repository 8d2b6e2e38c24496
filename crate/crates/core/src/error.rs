use thiserror::Error;

/// Errors produced by surface construction and the sum calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("dangling slot: band end `{0}` is referenced {1} times (expected exactly once)")]
    DanglingSlot(String, usize),
    #[error("empty presentation: a surface needs at least one disk")]
    EmptyPresentation,
    #[error("surface is not connected")]
    NotConnected,
    #[error("surface is not orientable")]
    NotOrientable,
    #[error("unknown disk `{0}`")]
    UnknownDisk(String),
    #[error("band end `{0}` attaches outside the marked attaching region")]
    BandOutsideAttachingRegion(String),
    #[error("both patches live on the same host surface")]
    SameHost,
    #[error("sum spec is not summable: {0}")]
    NotSummable(String),
    #[error("cycle is not in the span of the homology basis")]
    CycleNotInSpan,
    #[error("mapping classes act on different surfaces")]
    SurfaceMismatch,
    #[error("basis embedding into the sum is missing")]
    BasisEmbeddingMissing,
    #[error("page has a closed component (every page component needs boundary)")]
    ClosedComponent,
    #[error("cobordism bases differ")]
    BaseMismatch,
    #[error("degenerate core interval: need 0 < lo < hi < 1")]
    DegenerateCore,
    #[error("core intervals violate the required order (left core must come after right core)")]
    CoreOrderViolation,
    #[error("critical angles collide after reparametrization")]
    AngleCollision,
    #[error("invariant mismatch between pipelines: {0}")]
    InvariantMismatch(String),
    #[error("chord diagram is invalid: {0}")]
    InvalidChord(String),
    #[error("assembled Seifert matrix fails V - V^T = J")]
    SkewMismatch,
    #[error("Seifert matrix is not unimodular")]
    NotUnimodular,
    #[error("no core cycle crossing the patch exactly once")]
    NoCoreCycle,
    #[error("braid word is not homogeneous")]
    NotHomogeneous,
    #[error("generator {0} never occurs in the braid word")]
    MissingGenerator(usize),
    #[error("Bennequin surface is disconnected (some generator never occurs)")]
    DisconnectedSurface,
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("braid letter index {0} out of range for {1} strands")]
    IndexOutOfRange(i64, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
