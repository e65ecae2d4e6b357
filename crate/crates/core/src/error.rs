use thiserror::Error;

/// Errors raised by the algebra kernel and the decision procedures built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("monomial order does not match the basis order")]
    OrderMismatch,

    #[error("variable index {index} out of range for a ring with {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("variable name `{0}` already present in the ring")]
    NameCollision(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("point has {got} coordinates, ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("point does not lie on the variety of the ideal")]
    PointNotInVariety,

    #[error("cannot eliminate every variable of the ring")]
    EliminateAll,

    #[error("polynomial is not reduced (has a repeated factor)")]
    NotReduced,

    #[error("singular locus is not isolated")]
    NotIsolated,

    #[error("point is not a singular point")]
    NotSingular,

    #[error("line is a component of the curve or does not pass through the point")]
    BadLine(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Precondition failures on the input hypersurface (as opposed to malformed input).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotReduced
                | Error::NotIsolated
                | Error::NotSingular
                | Error::NotZeroDimensional
                | Error::PointNotInVariety
                | Error::ConstantPolynomial
                | Error::NotHomogeneous
                | Error::ZeroPolynomial
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
