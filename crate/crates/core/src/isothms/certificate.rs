use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopfcore::{Hopf, StructuredMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    SecondIsoQg,
    SecondIsoDqg,
    ThirdIso,
    Zassenhaus,
    Composite,
}

/// A Hopf algebra isomorphism produced by a constructive theorem.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    map: StructuredMap,
    theorem: Theorem,
}

impl IsoCertificate {
    /// Wraps `map` after checking it is a bijective Hopf algebra map.
    pub fn new(map: StructuredMap, theorem: Theorem) -> Result<Self> {
        if !map.flags().is_hopf_iso() {
            return Err(Error::TheoremViolation(format!(
                "{theorem:?} map is not an isomorphism: {:?}",
                map.flags()
            )));
        }
        Ok(IsoCertificate { map, theorem })
    }

    pub fn source(&self) -> &Hopf {
        self.map.domain()
    }

    pub fn target(&self) -> &Hopf {
        self.map.codomain()
    }

    pub fn map(&self) -> &StructuredMap {
        &self.map
    }

    pub fn theorem(&self) -> Theorem {
        self.theorem
    }

    /// Recomputes every flag from the matrix.
    pub fn verify(&self) -> bool {
        self.map.recheck().is_hopf_iso()
    }

    pub fn inverse(&self) -> Self {
        let inv = self.map.inverse().expect("certificates are bijective");
        IsoCertificate {
            map: inv,
            theorem: self.theorem,
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &IsoCertificate) -> Result<Self> {
        IsoCertificate::new(self.map.after(&first.map), Theorem::Composite)
    }
}
