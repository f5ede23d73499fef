//! Lattices of quantum subgroups in both pictures, normalization and the
//! modular law.

mod enumerate;
mod modular;
mod ops;
mod subgroup;

pub use enumerate::{enumerate_subgroups, subgroup_from_group};
pub use modular::{
    check_modular_law, modular_survey, ModularChecker, ModularMode, ModularReport, SurveySummary,
    Triple,
};
pub use ops::{
    is_normal_in, join, join_dqg, join_qg, leq, meet, meet_dqg, meet_qg, normality_in, normalizes,
    LatticeMemo,
};
pub use subgroup::{Picture, QuantumSubgroup};
