//! Test universe and the classical group-theoretic oracle.

mod algebras;
pub mod groups;

pub use algebras::*;
pub use groups::{FiniteGroup, Subset};
