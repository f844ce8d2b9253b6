use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("class is not primitive: {0}")]
    NotPrimitive(String),

    #[error("class is zero")]
    ZeroClass,

    #[error("curve coordinates ({0}, {1}) are not coprime")]
    NotCoprime(String, String),

    #[error("invalid stabilization: {0}")]
    InvalidStabilization(String),

    #[error("not a coupled handle (no Lagrangian index)")]
    NotACoupledHandle,

    #[error("invalid handle data: {0}")]
    InvalidHandle(String),

    #[error("invalid Morse data: {0}")]
    InvalidMorseData(String),

    #[error("filling is disconnected ({components} components)")]
    DisconnectedFilling { components: usize },

    #[error("no exact intersection quiver for {strands}-strand braids; supply an intersection record")]
    UnsupportedQuiver { strands: usize },

    #[error("illegal push: {0}")]
    IllegalPush(String),

    #[error("degenerate push: marker {0} lies on the target arc")]
    DegeneratePush(String),

    #[error("picture is already degenerate")]
    AlreadyDegenerate,

    #[error("nothing to merge (no index-1 critical values)")]
    NothingToMerge,

    #[error("picture is not degenerate")]
    NotDegenerate,

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unknown marker id: {0}")]
    UnknownMarker(String),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("invalid project file: {0}")]
    InvalidProject(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
