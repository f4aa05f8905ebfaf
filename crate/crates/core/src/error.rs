use thiserror::Error;

/// Errors raised by the counting, series and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: part {index} ({part}) exceeds the previous part")]
    NotWeaklyDecreasing { index: usize, part: usize },

    #[error("inner partition is not contained in the outer partition")]
    NotContained,

    #[error("inner partition has {rows} rows, more than the allowed {max_rows}")]
    InnerTooLong { rows: usize, max_rows: usize },

    #[error("partition has {rows} rows; at most 3 are supported")]
    TooManyRows { rows: usize },

    #[error("skew shape has {cells} cells, above the enumeration limit of {limit}")]
    TooManyCells { cells: usize, limit: usize },

    #[error("series has zero constant term and cannot be inverted")]
    NonUnitConstantTerm,

    #[error("square root needs constant term 1")]
    ConstantTermNotOne,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,

    #[error("coefficient of x^{power} is nonzero where exact cancellation was expected")]
    CancellationFailed { power: usize },

    #[error("internal identity violated: {0}")]
    InternalIdentityViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
