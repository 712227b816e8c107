use thiserror::Error;

use crate::partition::Partition;
use crate::symfunc::Basis;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("division by zero in coefficient")]
    DivisionByZero,

    #[error("expected a symmetric function in the {expected} basis, got {found}")]
    WrongBasis { expected: Basis, found: Basis },

    #[error("expected a homogeneous symmetric function")]
    NotHomogeneous,

    #[error("partition {0} has odd size")]
    OddSize(Partition),

    #[error("inconsistent perp sequence at r = {r}: {reason}")]
    InconsistentPerpSequence { r: usize, reason: String },

    #[error("tableau weight is not of the form (k,k,k)")]
    WrongWeight,

    #[error("method {method} does not apply to {case}")]
    NotApplicable { method: String, case: String },

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
