use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("invalid interval set: {0}")]
    InvalidIntervalSet(String),
    #[error("invalid point code: {0}")]
    InvalidCode(String),
    #[error("no points at the requested angle")]
    EmptyDerivedCode,
    #[error("lattice vector search failed: {0}")]
    SearchFailed(String),
    #[error("strongly regular graph: {0}")]
    Srg(String),
    #[error("moments need full pair counts")]
    NeedFullProfile,
    #[error("singular linear system")]
    SingularSystem,
    #[error("interpolation multiset has {found} nodes, expected {expected}: {nodes:?}")]
    MultisetMismatch {
        expected: usize,
        found: usize,
        nodes: Vec<Rational>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("cannot certify: {0}")]
    CannotCertify(String),
    #[error("potential is not defined at {0}")]
    Pole(Rational),
    #[error("unknown identifier {0:?}")]
    Unknown(String),
}
