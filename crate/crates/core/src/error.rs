use std::fmt;

use thiserror::Error;

/// Which ring axiom a table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddIdentity,
    AddCommutativity,
    AddInverse,
    AddAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
    MulAssociativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AddIdentity => "additive identity",
            Axiom::AddCommutativity => "additive commutativity",
            Axiom::AddInverse => "additive inverse",
            Axiom::AddAssociativity => "additive associativity",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::MulAssociativity => "multiplicative associativity",
        };
        f.write_str(s)
    }
}

/// Which group axiom a Cayley table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAxiom {
    Identity,
    Inverse,
    Associativity,
}

impl fmt::Display for GroupAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupAxiom::Identity => "identity",
            GroupAxiom::Inverse => "inverse",
            GroupAxiom::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// Errors raised while building or analysing rings and groups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring axiom violated ({kind}) at elements {witness:?}")]
    AxiomViolation { kind: Axiom, witness: [usize; 3] },
    #[error("group axiom violated ({kind}) at elements {witness:?}")]
    GroupAxiomViolation { kind: GroupAxiom, witness: [usize; 3] },
    #[error("requested order {requested} exceeds the size cap {cap}")]
    SizeCapExceeded { requested: u128, cap: usize },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("element belongs to a different ring")]
    ForeignElement,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no irreducible polynomial shipped for GF({p}^{k})")]
    NoPolynomialShipped { p: u64, k: u64 },
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("corner ring at the zero idempotent")]
    ZeroCorner,
    #[error("ring was not constructed as a group ring")]
    NotAGroupRing,
    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
