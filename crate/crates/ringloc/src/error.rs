use std::fmt;

use serde::{Deserialize, Serialize};

/// A single failed ring axiom together with the elements that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFailure {
    pub axiom: String,
    pub witness: Vec<usize>,
}

impl fmt::Display for AuditFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring order {0}")]
    InvalidOrder(usize),
    #[error("ring of order {order} exceeds the size cap {cap}")]
    SizeLimit { order: u128, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("ring axiom audit failed: {0}")]
    Audit(AuditFailure),
    #[error("set is not a {0} ideal")]
    Sidedness(&'static str),
    #[error("the ideal is the whole ring")]
    ImproperIdeal,
    #[error("objects belong to different rings")]
    RingMismatch,
    #[error("element id {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("multiplicative closure contains zero: {x} * {y} = 0")]
    ZeroInClosure { x: usize, y: usize },
    #[error("not a left denominator set: {0}")]
    NotDenominator(String),
    #[error("element {0} is not normal")]
    NotNormal(usize),
    #[error("ideal is not the kernel of any left localization")]
    NotAssassinator,
    #[error("ideal is not prime")]
    NotPrime,
    #[error("ring is not semiprime")]
    NotSemiprime,
    #[error("monomial ideal contains a constant, so it is the unit ideal")]
    UnitIdeal,
    #[error("localization is the zero ring: the saturation is the unit ideal")]
    CollapsedLocalization,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
