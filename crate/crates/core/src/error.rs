use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term {0} is not a unit; series is not invertible over the integers")]
    NonUnitConstant(String),

    #[error("invalid product factor (offset {offset}, step {step}, exponent {exponent}): {reason}")]
    InvalidFactor {
        offset: u64,
        step: u64,
        exponent: i64,
        reason: &'static str,
    },

    #[error("dilation by {factor} to order {target} needs order {needed}, series has order {have}")]
    DilationOutOfRange {
        factor: usize,
        target: usize,
        needed: usize,
        have: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration would produce {predicted} items, cap is {cap}")]
    CapExceeded { predicted: String, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("symbol {0} is not special")]
    NotSpecial(String),

    #[error("symbol {sub} is not a subsymbol of {of}")]
    NotSubsymbol { sub: String, of: String },
}
