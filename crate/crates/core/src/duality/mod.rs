//! Coduality between coideal subalgebras and quotients, adjoint invariance,
//! normality and exact sequences.

mod adjoint;
mod codual;
mod normal;

pub use adjoint::{
    ad_action, ad_invariance, coadjoint_descends, AdInvariance, AdSide, AdWitness, Coaction,
};
pub use codual::{cd_of_quotient, cd_of_subalgebra, CdQuotient, QuotientMap};
pub use normal::{
    largest_cocommutative, normality, ExactSequenceWitness, Normality, NormalityInput,
    NotNormalReport,
};
