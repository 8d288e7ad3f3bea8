use thiserror::Error;

/// Errors produced by the library.
///
/// Index values carried by variants are 1-based, matching the `f_1 .. f_n`
/// labels used everywhere else in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },

    #[error("grade overflow: grade {grade} exceeds dimension {dim}")]
    GradeOverflow { grade: usize, dim: usize },

    #[error("grade underflow: operation needs grade >= 1")]
    GradeUnderflow,

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("repeated index {0} in multi-index")]
    RepeatedIndex(usize),

    #[error("bivector is not simple")]
    NotSimple,

    #[error("zero element where a nonzero one is required")]
    ZeroElement,

    #[error("structure constant for [f_{i}, f_{j}] must have i < j")]
    BracketOrder { i: usize, j: usize },

    #[error("duplicate structure constant ({i}, {j}, {k})")]
    DuplicateConstant { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails at (f_{i}, f_{j}, f_{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("Lie algebra is not unimodular")]
    NotUnimodular,

    #[error("operation requires dimension {required}, algebra has dimension {found}")]
    UnsupportedDimension { required: usize, found: usize },

    #[error("matrix is not an almost complex structure (J^2 != -id)")]
    NotComplexStructure,

    #[error("J induces the opposite orientation; negate zeta or one basis vector")]
    OrientationMismatch,

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("inner product is not symmetric positive definite")]
    NotPositiveDefinite,

    #[error("metric volume is not rational (det = {0})")]
    IrrationalVolume(String),

    #[error("orientation volume form does not match the metric volume form")]
    IncompatibleOrientation,

    #[error("chart ({i}, {j}) is invalid for this J: the plane spanned by f_{i}, f_{j} is J-invariant")]
    InvalidChart { i: usize, j: usize },

    #[error("J is not tamed by any symplectic form")]
    NotTamed,

    #[error("J is tamed; no obstruction exists")]
    Tamed,

    #[error("form is not admissible: {0}")]
    InadmissibleForm(String),

    #[error("coordinate vector has length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("unknown family `{family}` for `{entry}`")]
    UnknownFamily { entry: String, family: String },

    #[error("family parameter constraint violated: {0}")]
    ParameterConstraint(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
