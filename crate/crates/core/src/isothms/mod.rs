//! Constructive second and third isomorphism theorems and the butterfly
//! lemma, each returning a verified Hopf algebra isomorphism.

mod certificate;
mod second;
mod subquotient;
mod third;
mod zassenhaus;

pub use certificate::{IsoCertificate, Theorem};
pub use second::{second_iso, second_iso_dqg, second_iso_qg, SecondIso};
pub use subquotient::{canonical_map, Subquotient};
pub use third::{third_iso, ThirdIso};
pub use zassenhaus::{zassenhaus, ButterflyNodes, Zassenhaus};
