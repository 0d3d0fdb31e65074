use thiserror::Error;

/// Domain errors raised by series, composition, Riordan and Lie operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible (zero, order undetermined, or non-unit leading coefficient)")]
    NotInvertible,
    #[error("0^0 is undefined")]
    ZeroPowerZero,
    #[error("order of the series is undetermined at the available precision")]
    Undetermined,
    #[error("leading coefficient has no {0}-th root in the coefficient field")]
    NoRootInField(u32),
    #[error("expected a series of order 0, got order {0}")]
    OrderNotZero(i64),
    #[error("expected a series of order 1, got {0}")]
    OrderNotOne(String),
    #[error("composition undefined: {0}")]
    CompositionUndefined(&'static str),
    #[error("series is not tangent to the identity (linear coefficient must be 1)")]
    NotTangentToIdentity,
    #[error("generating series g must be nonzero with determined order")]
    InvalidGeneratingSeries,
    #[error("second series f must have order exactly 1 with invertible linear coefficient")]
    InvalidF,
    #[error("array is not in RL0_11 (needs ord g = 0 and f_1 = 1)")]
    NotInSubgroup,
    #[error("A-sequence has zero leading term")]
    ZeroLeadingA,
    #[error("invalid tangent vector: kappa must have vanishing constant term")]
    InvalidTangent,
    #[error("invalid operator: alpha must have vanishing constant term")]
    InvalidOperator,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotInvertible => "NotInvertible",
            Error::ZeroPowerZero => "ZeroPowerZero",
            Error::Undetermined => "Undetermined",
            Error::NoRootInField(_) => "NoRootInField",
            Error::OrderNotZero(_) => "OrderNotZero",
            Error::OrderNotOne(_) => "OrderNotOne",
            Error::CompositionUndefined(_) => "CompositionUndefined",
            Error::NotTangentToIdentity => "NotTangentToIdentity",
            Error::InvalidGeneratingSeries => "InvalidGeneratingSeries",
            Error::InvalidF => "InvalidF",
            Error::NotInSubgroup => "NotInSubgroup",
            Error::ZeroLeadingA => "ZeroLeadingA",
            Error::InvalidTangent => "InvalidTangent",
            Error::InvalidOperator => "InvalidOperator",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
