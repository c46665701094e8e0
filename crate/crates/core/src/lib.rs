//! Finite groups, their p-dimension central series and the associated
//! graded Lie algebras over F_p.

pub mod error;
pub mod group;
pub mod harness;
pub mod identities;
pub mod lie;
pub mod linalg;
pub mod series;
pub(crate) mod util;

pub use error::{Error, Result};
