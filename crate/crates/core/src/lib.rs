//! Exact computation of quantum-subgroup lattices of finite-dimensional Hopf
//! algebras, in the quotient picture (Hopf ideals) and the subalgebra
//! picture (Hopf subalgebras), with constructive isomorphism theorems.

pub mod error;
pub mod exactalg;
pub mod hopfcore;

pub use error::{Error, Result};
pub mod corpus;
pub mod duality;
pub mod integrals;
pub mod io;
pub mod isothms;
pub mod lattice;
pub mod series;
pub mod subobj;
