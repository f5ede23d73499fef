use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::duality::{cd_of_quotient, cd_of_subalgebra, normality, NormalityInput, QuotientMap};
use crate::error::{Error, Result};
use crate::exactalg::{SparseVec, Subspace};
use crate::hopfcore::{restrict, Hopf};
use crate::subobj::{classify, quotient_by_hopf_ideal, QuotientPresentation};

/// Quantum subgroups presented by Hopf quotients of the ambient (`Qg`) or by
/// Hopf subalgebras of it (`Dqg`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Picture {
    Qg,
    Dqg,
}

impl fmt::Display for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Picture::Qg => "QG",
            Picture::Dqg => "DQG",
        })
    }
}

impl std::str::FromStr for Picture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QG" => Ok(Picture::Qg),
            "DQG" => Ok(Picture::Dqg),
            _ => Err(Error::Schema(format!("unknown picture {s}"))),
        }
    }
}

/// A quantum subgroup. Equality is equality of the presenting subspace:
/// the Hopf ideal in the `Qg` picture, the Hopf subalgebra in `Dqg`.
#[derive(Clone)]
pub struct QuantumSubgroup {
    ambient: Hopf,
    picture: Picture,
    space: Subspace,
    quotient: OnceLock<QuotientPresentation>,
    algebra: OnceLock<Hopf>,
    partner: OnceLock<Subspace>,
}

impl QuantumSubgroup {
    /// `Qg` subgroup with the given kernel, verified to be a Hopf ideal.
    pub fn qg(ambient: &Hopf, kernel: Subspace) -> Result<Self> {
        let q = quotient_by_hopf_ideal(ambient, &kernel)?;
        let s = Self::unchecked(ambient, Picture::Qg, kernel);
        let _ = s.quotient.set(q);
        Ok(s)
    }

    /// `Dqg` subgroup, verified to be a Hopf subalgebra.
    pub fn dqg(ambient: &Hopf, subalgebra: Subspace) -> Result<Self> {
        if !classify(ambient, &subalgebra).hopf_subalgebra() {
            return Err(Error::NotHopfSubalgebra(format!(
                "subspace of dimension {}",
                subalgebra.dim()
            )));
        }
        Ok(Self::unchecked(ambient, Picture::Dqg, subalgebra))
    }

    pub fn new(ambient: &Hopf, picture: Picture, space: Subspace) -> Result<Self> {
        match picture {
            Picture::Qg => Self::qg(ambient, space),
            Picture::Dqg => Self::dqg(ambient, space),
        }
    }

    /// Trusted constructor for spaces produced by lattice operations.
    pub(crate) fn unchecked(ambient: &Hopf, picture: Picture, space: Subspace) -> Self {
        QuantumSubgroup {
            ambient: ambient.clone(),
            picture,
            space,
            quotient: OnceLock::new(),
            algebra: OnceLock::new(),
            partner: OnceLock::new(),
        }
    }

    pub fn whole(ambient: &Hopf, picture: Picture) -> Self {
        let n = ambient.dim();
        let space = match picture {
            Picture::Qg => Subspace::zero(n),
            Picture::Dqg => Subspace::full(n),
        };
        Self::unchecked(ambient, picture, space)
    }

    pub fn trivial(ambient: &Hopf, picture: Picture) -> Self {
        let n = ambient.dim();
        let space = match picture {
            Picture::Qg => {
                Subspace::full(n).kernel_of(|x| SparseVec::single(0, ambient.counit_of(x)))
            }
            Picture::Dqg => Subspace::from_vectors(n, vec![ambient.unit().to_vec()]),
        };
        Self::unchecked(ambient, picture, space)
    }

    pub fn ambient(&self) -> &Hopf {
        &self.ambient
    }

    pub fn picture(&self) -> Picture {
        self.picture
    }

    /// The presenting subspace: kernel (`Qg`) or subalgebra (`Dqg`).
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Dimension of the subgroup's own Hopf algebra.
    pub fn dim(&self) -> usize {
        match self.picture {
            Picture::Qg => self.ambient.dim() - self.space.dim(),
            Picture::Dqg => self.space.dim(),
        }
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.ambient.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 1
    }

    /// The quotient `O(G) → O(K)`; `Qg` only.
    pub fn quotient(&self) -> Option<&QuotientPresentation> {
        if self.picture != Picture::Qg {
            return None;
        }
        Some(self.quotient.get_or_init(|| {
            quotient_by_hopf_ideal(&self.ambient, &self.space)
                .expect("lattice operations preserve Hopf ideals")
        }))
    }

    /// The subgroup's own Hopf algebra: the quotient, or the restricted structure.
    pub fn algebra(&self) -> &Hopf {
        self.algebra.get_or_init(|| match self.picture {
            Picture::Qg => self.quotient().unwrap().quotient.clone(),
            Picture::Dqg => Arc::new(
                restrict(&self.ambient, &self.space)
                    .expect("lattice operations preserve Hopf subalgebras"),
            ),
        })
    }

    /// The codual partner: `cd(π) ⊆ O(G)` for `Qg`, the kernel `HA⁻` of
    /// `cd(A)` for `Dqg`.
    pub fn cd_partner(&self) -> &Subspace {
        self.partner.get_or_init(|| match self.picture {
            Picture::Qg => cd_of_quotient(self.quotient().unwrap()),
            Picture::Dqg => cd_of_subalgebra(&self.ambient, &self.space)
                .expect("Hopf subalgebras are coideal subalgebras")
                .kernel()
                .clone(),
        })
    }

    /// Normal in the ambient.
    pub fn is_normal(&self) -> bool {
        let r = match self.picture {
            Picture::Qg => normality(
                &self.ambient,
                NormalityInput::Quotient(self.quotient().unwrap()),
            ),
            Picture::Dqg => normality(&self.ambient, NormalityInput::Subalgebra(&self.space)),
        };
        r.is_ok_and(|n| n.is_normal())
    }

    /// Same picture and same ambient algebra.
    pub fn same_frame(&self, other: &QuantumSubgroup) -> Result<()> {
        if self.picture != other.picture {
            return Err(Error::PictureMismatch(format!(
                "{} vs {}",
                self.picture, other.picture
            )));
        }
        if !Arc::ptr_eq(&self.ambient, &other.ambient) && *self.ambient != *other.ambient {
            return Err(Error::PictureMismatch("different ambient algebras".into()));
        }
        Ok(())
    }

    pub(crate) fn with_space(&self, space: Subspace) -> Self {
        Self::unchecked(&self.ambient, self.picture, space)
    }
}

impl PartialEq for QuantumSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.picture == other.picture && self.space == other.space
    }
}

impl Eq for QuantumSubgroup {}

impl Hash for QuantumSubgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.picture.hash(state);
        self.space.hash(state);
    }
}

impl fmt::Debug for QuantumSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuantumSubgroup({}, dim {})", self.picture, self.dim())
    }
}
