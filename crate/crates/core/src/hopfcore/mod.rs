//! Finite-dimensional Hopf algebras given by structure constants.

mod algebra;
mod constructions;
mod grouplikes;
mod map;
mod validate;

pub use algebra::{format_combination, Element, Hopf, HopfAlgebra};
pub use constructions::{dual, restrict, tensor_product, trivial, variant};
pub(crate) use constructions::{project, quotient_structure};
pub use grouplikes::{grouplikes, Grouplikes};
pub use map::{MapFlags, StructuredMap};
pub use validate::{build_validate, Axiom, AxiomFailure, AxiomReport, RawHopf};
