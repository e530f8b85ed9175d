use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("size budget exceeded: alpha(T^{m}) = {projected} > {budget}")]
    Budget {
        m: usize,
        projected: BigUint,
        budget: u64,
    },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("matrix is not mixing")]
    NotMixing,
}
