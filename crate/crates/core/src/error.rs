use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("relation {0} has summands that are not parallel paths")]
    NonParallelRelation(usize),
    #[error("relation {0} is not admissible: {1}")]
    NonAdmissibleRelation(usize, String),
    #[error("algebra is not finite-dimensional within path length {0}")]
    NotFiniteDimensional(usize),
    #[error("path is not composable: {0}")]
    IncomposablePath(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("operation undefined on the zero module")]
    ZeroModule,
    #[error("isomorphism test inconclusive")]
    Inconclusive,
    #[error("field of characteristic {p} too small for a module of dimension {dim}")]
    FieldTooSmall { p: u32, dim: usize },
    #[error("syzygy orbit undetermined within {0} steps")]
    UndeterminedOrbit(usize),
    #[error("indecomposable list carries no completeness certificate")]
    IncompleteIndecomposableList,
    #[error("algebra is not Gorenstein within the search bound")]
    NotGorenstein,
    #[error("algebra is not selfinjective")]
    NotSelfinjective,
    #[error("arcs live on discs with different numbers of marked points ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("triangulation is not of type I")]
    NotTypeI,
    #[error("triangulation is of none of the types I, II, III")]
    TypeOther,
    #[error("unsupported tagged configuration: {0}")]
    UnsupportedTaggedConfiguration(String),
    #[error("module violates relation {0}")]
    RelationViolated(usize),
    #[error("module is not indecomposable: {0}")]
    NotIndecomposable(String),
    #[error("label index out of range: ({0}, {1})")]
    IndexOutOfRange(usize, usize),
    #[error("elementary move not defined at ({0}, {1})")]
    MoveNotDefined(usize, usize),
    #[error("enumeration of indecomposables exceeded {0} modules")]
    EnumerationLimit(usize),
}
