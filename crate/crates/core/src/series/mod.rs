//! Subnormal series, constructive Schreier refinement and Jordan–Hölder
//! equivalence of composition series.

mod chain;
mod composition;
mod refine;

pub use chain::{validate_series, SubnormalSeries};
pub use composition::{
    check_composition, enumerable_subgroups, find_composition_series, jordan_holder,
};
pub use refine::{schreier_refine, GridCell, Refinement, SeriesEquivalenceCertificate};
