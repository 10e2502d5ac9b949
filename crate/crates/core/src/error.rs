use alloc::string::String;
use alloc::vec::Vec;

use crate::topology::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("carrier must contain at least one point")]
    EmptyCarrier,
    #[error("duplicate carrier label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid carrier label `{0}`")]
    InvalidLabel(String),
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("expected {expected} membership values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("membership numerator {value} at position {index} exceeds denominator {denominator}")]
    OutOfRange { index: usize, value: u32, denominator: u32 },
    #[error("fuzzy sets live on different carriers")]
    CarrierMismatch,
    #[error("fuzzy sets use different denominators ({left} vs {right})")]
    DenominatorMismatch { left: u32, right: u32 },
    #[error("operation needs a non-empty family")]
    EmptyFamily,
    #[error("cannot regrid denominator {from} to {to} exactly")]
    InexactRegrid { from: u32, to: u32 },
    #[error("family is not a fuzzy topology ({} violation(s))", .0.len())]
    InvalidTopology(Vec<Violation>),
    #[error("completion exceeded the cap of {cap} open sets")]
    CompletionOverflow { cap: usize },
    #[error("claim `{claim}` takes {expected} argument(s), got {found}")]
    ArityMismatch {
        claim: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("exhaustive enumeration refused for n={n}, d={d}: {grid} grid sets exceeds the limit of {limit}")]
    EnumerationInfeasible { n: usize, d: u32, grid: u64, limit: u64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("random topology generation overflowed the cap {attempts} times in a row")]
    RandomTopologyOverflow { attempts: usize },
}
