use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partitions have different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the empty partition has no Specht module here")]
    EmptyPartition,

    #[error("parameter m = {m} must be smaller than n = {n}")]
    SizeError { n: usize, m: usize },

    #[error("A-set of {partition} at m = {m} is not totally ordered: {left} and {right} are incomparable")]
    NotTotallyOrdered {
        partition: Partition,
        m: usize,
        left: Partition,
        right: Partition,
    },

    #[error("family does not contain {missing}, which appears in the chain of {source_partition}")]
    FamilyIncomplete {
        missing: Partition,
        source_partition: Partition,
    },

    #[error("chain shapes for tail {tail} at m = {m} differ between n = {n0} and n = {n1}")]
    NotStabilized {
        tail: Partition,
        m: usize,
        n0: usize,
        n1: usize,
    },

    #[error("residue {m} beyond the table range is not generic for tail {tail}")]
    ResidueNotGeneric { tail: Partition, m: usize },

    #[error("partition size {size} exceeds the oracle size cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("no new prime found for t <= {ceiling}")]
    SearchExhausted { ceiling: u64 },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors raised by a computational limit rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. }
                | Error::SearchExhausted { .. }
                | Error::NotStabilized { .. }
                | Error::ResidueNotGeneric { .. }
                | Error::NotTotallyOrdered { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
