use thiserror::Error;

/// Errors produced by the combinatorial and linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),

    #[error("parts must be weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("bead count {beads} is smaller than the partition length {length}")]
    InvalidBeadCount { beads: usize, length: usize },

    #[error("beta-numbers must be strictly decreasing: {0:?}")]
    InvalidBeta(Vec<usize>),

    #[error("illegal bead move from {from} to {to}")]
    IllegalMove { from: usize, to: usize },

    #[error("map not defined: {0}")]
    NotDefined(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("not found: {0}")]
    NotFound(String),

    #[error("excluded case: {0}")]
    Excluded(String),

    #[error("search exceeded the depth cap of {cap}")]
    Undecided { cap: usize },

    #[error("freeness probes disagree at {0:?}")]
    ProbeDisagreement(Vec<u64>),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
