use alloc::string::String;

use crate::labels::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A malformed argument: sizes that do not add up, a non-partition, etc.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The rank is beyond what the configured limits allow for this family.
    #[error("unsupported rank: {family} at n = {n} exceeds the configured maximum {max}")]
    UnsupportedRank {
        family: Family,
        n: usize,
        max: usize,
    },

    /// A computation that would need more than the configured working size.
    #[error("ceiling exceeded: {what} has size {size}, ceiling is {ceiling}")]
    CeilingExceeded {
        what: &'static str,
        size: usize,
        ceiling: usize,
    },

    /// A request the library deliberately does not answer, such as character
    /// values of an individual split D_n irreducible.
    #[error("outside supported scope: {0}")]
    OutsideScope(&'static str),

    /// A fitting problem with fewer independent sample rows than unknowns.
    #[error(
        "window too small: {ranks} rank(s) give {rank} independent equations for {unknowns} unknowns"
    )]
    WindowTooSmall {
        ranks: usize,
        rank: usize,
        unknowns: usize,
    },

    /// A scan ran into the rank ceiling before the data stabilized.
    #[error("inconclusive: no stabilization by rank {last_rank}; {detail}")]
    Inconclusive { last_rank: usize, detail: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
