//! Subobject calculus: classification of subspaces, closures, Hopf-ideal
//! arithmetic and quotient constructions.

mod classify;
mod closure;
mod quotient;

pub use classify::{classify, coideal_defect, ClassifiedSubspace};
pub use closure::{
    generate_closed, largest_hopf_ideal_within, minus_part, sum_of_hopf_ideals, Closure,
};
pub use quotient::{
    quotient_by_hopf_ideal, quotient_module_coalgebra, ModuleQuotient, QuotientPresentation,
};
