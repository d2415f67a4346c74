use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty face is not allowed")]
    EmptyFace,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex label `{0}`: {1}")]
    InvalidLabel(String, &'static str),
    #[error("face references undeclared vertex `{0}`")]
    UnknownVertex(String),
    #[error("label `{0}` collides with the ground set")]
    LabelCollision(String),
    #[error("apex labels must differ, got `{0}` twice")]
    EqualApexLabels(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope must have at least one generator")]
    NoGenerators,
    #[error("ambient dimension must be at least 1")]
    ZeroAmbientDimension,
    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,
    #[error("chart does not parametrize the hyperplane: {0}")]
    DegenerateChart(&'static str),
    #[error("prism bounds must satisfy lo < hi")]
    EmptyPrismInterval,
    #[error("polytope is already full-dimensional")]
    AlreadyFullDimensional,
    #[error("sets intersect, no separating hyperplane exists")]
    SetsIntersect,

    #[error("family must contain at least one member")]
    EmptyFamily,
    #[error("duplicate member label `{0}`")]
    DuplicateMember(String),
    #[error("no member labeled `{0}`")]
    MissingMember(String),
    #[error("member `{label}` has affine dimension {got}, expected at most {bound}")]
    MemberDimensionTooHigh {
        label: String,
        got: usize,
        bound: usize,
    },
    #[error("member `{label}` has affine dimension {got}, expected exactly {expected}")]
    MemberDimensionMismatch {
        label: String,
        got: usize,
        expected: usize,
    },
    #[error("suspension lift requires j in {{d-1, d}}, got j={j} for ambient dimension {d}")]
    UnsupportedLiftDimension { j: usize, d: usize },
    #[error("members `{a}` and `{b}` intersect, not a suspension realization")]
    ApexSetsIntersect { a: String, b: String },
    #[error("extrusion did not stabilize the nerve after {0} halvings")]
    ExtrusionDidNotStabilize(u32),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("malformed JSON: {0}")]
    MalformedJson(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family with {0} members is too large for exhaustive enumeration (max {1})")]
    FamilyTooLarge(usize, usize),
    #[error("complex with {0} vertices is too large for endpoint enumeration (max {1})")]
    TooManyVertices(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
