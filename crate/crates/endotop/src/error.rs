use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by how the CLI maps them to exit codes: malformed
/// input (1), violated construction preconditions (2), and internal
/// cross-check failures (3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("grade {0} is outside [0, 1]")]
    GradeOutOfRange(String),

    #[error("cannot parse {0:?} as a rational grade (expected \"p/q\", \"0\" or \"1\")")]
    GradeParse(String),

    #[error("carrier mismatch: left has {left} elements, right has {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("carrier must have at least one element")]
    EmptyCarrier,

    #[error("carrier labels must be distinct and match the carrier size")]
    BadLabels,

    #[error("map entry f({x}) = {image} is outside the carrier 0..{size}")]
    MapOutOfRange { x: usize, image: usize, size: usize },

    #[error("map length {got} does not match carrier size {size}")]
    MapLengthMismatch { got: usize, size: usize },

    #[error(
        "the orbit topology requires a one-to-one map, but f({a}) = f({b}) = {image}"
    )]
    NotInjective { a: usize, b: usize, image: usize },

    #[error(
        "the complement chain is defined only for maps without periodic points \
         (otherwise every member is empty and the family cannot cover the carrier); \
         element {x} satisfies f^{m}({x}) = {x}. On a finite carrier some element \
         is always periodic, so this family exists only as a symbolic object."
    )]
    PeriodicPointPresent { x: usize, m: usize },

    #[error("fuzzy point degree must be positive")]
    ZeroDegreePoint,

    #[error("orbit parameter k must be a positive integer")]
    ZeroK,

    #[error("base point {x0} is outside the carrier 0..{size}")]
    BasePointOutOfRange { x0: usize, size: usize },

    #[error("the family does not cover the carrier: pointwise sup is below 1 at element {element}")]
    DoesNotCover { element: usize },

    #[error("the family member at position {position} is not open in this space")]
    NotOpen { position: usize },

    #[error("window must be at least 1")]
    ZeroWindow,

    #[error("sweep size {max_size} exceeds the cost guard (max 6, about {estimate} instances requested)")]
    SweepTooLarge { max_size: usize, estimate: u64 },

    #[error("sweep window {window} is below the required max_size + 2 = {required}")]
    SweepWindowTooSmall { window: u32, required: u32 },

    #[error("instance file: {0}")]
    InstanceFile(String),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error(
        "internal consistency failure: the symbolic chain decider and the \
         materialized decider disagree on {context} ({symbolic} vs {materialized})"
    )]
    RepresentationDisagreement {
        context: String,
        symbolic: bool,
        materialized: bool,
    },
}

impl Error {
    /// CLI exit code: 1 malformed input, 2 violated precondition,
    /// 3 internal consistency failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::NotInjective { .. }
            | Error::PeriodicPointPresent { .. }
            | Error::ZeroK
            | Error::BasePointOutOfRange { .. } => 2,
            Error::RepresentationDisagreement { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
