use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex label {0} out of range (labels must be below 128)")]
    LabelOutOfRange(u32),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u32),
    #[error("face {face} uses labels outside the vertex set {vertices}")]
    UnknownLabel { face: Face, vertices: Face },
    #[error("vertex {0} lies in no facet and was not declared a ghost vertex")]
    UncoveredVertex(u32),
    #[error("family is not an antichain: {0} is contained in {1}")]
    NotAntichain(Face, Face),
    #[error("singleton missing face {0} deletes a vertex; ghost vertices were not permitted")]
    SingletonMissingFace(Face),
    #[error("the empty set cannot be a missing face of a non-void complex")]
    EmptyMissingFace,
    #[error("h(X) is undefined: the complex has no missing face of positive size")]
    HUndefined,
    #[error("complexes live on different vertex sets ({0} vs {1})")]
    VertexSetMismatch(Face, Face),
    #[error("no complexes given")]
    EmptyInput,
    #[error("skeleton dimension {k} out of range for {n} vertices")]
    SkeletonOutOfRange { k: usize, n: usize },
    #[error("operation undefined on the complete complex")]
    CompleteComplex,
    #[error("{0} missing faces exceed the 128-label limit for derived complexes")]
    TooManyMissingFaces(usize),
    #[error("edge {0} is not a pair of distinct vertices of the graph")]
    BadEdge(Face),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("resource guard: {what} ({actual} > {limit})")]
    ResourceLimit { what: &'static str, actual: usize, limit: usize },
    #[error("obstruction precondition violated: {0}")]
    Obstruction(#[from] ObstructionViolation),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// The individual hypotheses of the two-missing-face obstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionViolation {
    #[error("|{which}| = {size}, expected d+1 = {expected}")]
    WrongSize { which: &'static str, size: usize, expected: usize },
    #[error("intersection too large: |A∩B| = {size} is not below d = {d}")]
    IntersectionTooLarge { size: usize, d: usize },
    #[error("vertex set {vertices} is not A∪B = {union}")]
    VertexSetNotUnion { vertices: Face, union: Face },
    #[error("{0} is not a missing face")]
    NotMissingFace(Face),
    #[error("missing face {0} does not satisfy τ∪A = V and τ∪B = V")]
    ForeignMissingFace(Face),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("malformed design: {0}")]
    Malformed(String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("unknown built-in design {0:?}")]
    UnknownDesign(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoxdError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error("missing face {0} is larger than d+1")]
    MissingFaceTooLarge(Face),
    #[error("need at least d+1 = {need} vertices, have {have}")]
    TooFewVertices { need: usize, have: usize },
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource guard: {what} ({actual} > {limit})")]
    ResourceLimit { what: &'static str, actual: usize, limit: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("malformed geometry: {0}")]
    Malformed(String),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource guard: {what} ({actual} > {limit})")]
    ResourceLimit { what: &'static str, actual: u128, limit: u128 },
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Crate-wide error, used by the file-format layer and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Boxd(#[from] BoxdError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error is a resource-guard refusal rather than a domain error.
    pub fn is_resource_refusal(&self) -> bool {
        matches!(
            self,
            Error::Homology(HomologyError::ResourceLimit { .. })
                | Error::Boxd(BoxdError::ResourceLimit { .. })
                | Error::Boxd(BoxdError::Homology(HomologyError::ResourceLimit { .. }))
                | Error::Geometry(GeometryError::ResourceLimit { .. })
        )
    }

    /// Short machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Complex(_) => "complex",
            Error::Homology(_) => "homology",
            Error::Design(_) => "design",
            Error::Boxd(_) => "boxicity",
            Error::Geometry(_) => "geometry",
            Error::Schema(_) | Error::Json(_) => "schema",
        }
    }
}
