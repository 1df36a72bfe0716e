use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the order k must be at least 1")]
    ZeroOrder,
    #[error("element {value} does not belong to S_{k}")]
    ContextMismatch { value: u32, k: u32 },
    #[error("operands come from different semirings (S_{left} and S_{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("{what} is limited to k <= {limit}, got k = {k}")]
    BoundExceeded { what: &'static str, k: u32, limit: u32 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("not an ideal: {0}")]
    NotAnIdeal(&'static str),
    #[error("invalid multiplicative set: {0}")]
    InvalidMultiplicativeSet(&'static str),
    #[error("fraction construction failed: {0}")]
    IllDefinedQuotient(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("window depths differ ({left} and {right})")]
    DepthMismatch { left: usize, right: usize },
}
