use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("circle radius must be finite and nonzero")]
    ZeroRadius,
    #[error("halfplane normal must have unit length (|n| = {norm})")]
    NonUnitNormal { norm: f64 },
    #[error("value is not finite")]
    NonFinite,
    #[error("vector is not a normalized circle vector (<v,v> = {self_product})")]
    NotNormalized { self_product: f64 },
    #[error("vector is not space-like (<v,v> = {self_product})")]
    NotSpacelike { self_product: f64 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("configuration is degenerate: its Gramian is singular")]
    DegenerateConfiguration,
    #[error("no real solution: discriminant {discriminant} is negative")]
    ComplexRoots { discriminant: f64 },
    #[error("disks {i} and {j} are not tangent (|<c_i,c_j> - 1| = {residual})")]
    NotTangent { i: usize, j: usize, residual: f64 },
    #[error("triple is degenerate: tangency constraints have rank < 3")]
    DegenerateTriple,
    #[error("index {0} out of range for a quadruple")]
    InvalidIndex(usize),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("generation limits are all unbounded")]
    UnboundedLimits,
    #[error("gasket has no disks")]
    EmptyGasket,
    #[error("dimension must be at least 2 (got {0})")]
    BadDimension(usize),
    #[error("expected {expected} items, got {got}")]
    WrongCount { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
