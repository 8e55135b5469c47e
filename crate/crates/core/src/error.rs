use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid typed k-strict partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not {1}-Grassmannian")]
    NotGrassmannian(String, u32),
    #[error("partition {0} does not fit in the {1}x{2} rectangle")]
    OutsideRectangle(String, usize, u32),
    #[error("coefficient is not divisible by 2 in the chosen scalar ring")]
    NonIntegral,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, EtaError>;
