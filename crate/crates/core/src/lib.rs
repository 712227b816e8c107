//! Exact symmetric functions over the rationals: partitions, the five
//! classical bases, Littlewood-Richardson products and skews, and several
//! ways of computing plethysms of Schur functions.

pub mod bench;
mod context;
pub mod error;
pub mod expr;
pub mod lr;
pub mod output;
pub mod partition;
pub mod plethysm;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use context::Context;
pub use error::{Error, Result};
pub use partition::Partition;
pub use plethysm::Method;
pub use symfunc::{Basis, Rational, SymFunc};
