use std::sync::Arc;

use crate::duality::cd_of_quotient;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Subspace};
use crate::hopfcore::{restrict, Hopf, StructuredMap};
use crate::lattice::{leq, Picture, QuantumSubgroup};
use crate::subobj::{minus_part, quotient_by_hopf_ideal, QuotientPresentation};

#[derive(Clone, Debug)]
enum Presentation {
    /// `O(T/B) = cd(O(T) → O(B)) ⊆ O(T)`, with `O(T)` a quotient of the ambient.
    Qg {
        top: QuotientPresentation,
        space: Subspace,
    },
    /// `kT / kT·kB⁻`, with `kT` restricted from the ambient.
    Dqg { quotient: QuotientPresentation },
}

/// The Hopf algebra of `T/B` for `B ⊴ T`, presented canonically from the
/// ambient so that subquotients of one ambient can be compared by
/// canonical maps.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub top: QuantumSubgroup,
    pub bottom: QuantumSubgroup,
    pub algebra: Hopf,
    presentation: Presentation,
}

impl Subquotient {
    pub fn new(top: &QuantumSubgroup, bottom: &QuantumSubgroup) -> Result<Self> {
        if !leq(bottom, top)? {
            return Err(Error::NotContained(
                "subquotient bottom is not below its top".into(),
            ));
        }
        let not_normal = || Error::NotNormal("subquotient bottom is not normal in its top".into());
        let (algebra, presentation) = match top.picture() {
            Picture::Qg => {
                let tq = top.quotient().expect("Qg").clone();
                let image = bottom.space().image_under(tq.projection.matrix());
                let to_bottom = quotient_by_hopf_ideal(&tq.quotient, &image)?;
                let space = cd_of_quotient(&to_bottom);
                let algebra = Arc::new(restrict(&tq.quotient, &space).map_err(|_| not_normal())?);
                (algebra, Presentation::Qg { top: tq, space })
            }
            Picture::Dqg => {
                let ta = top.algebra().clone();
                let local = bottom.space().relative_to(top.space());
                let ideal = left_ideal(&ta, &minus_part(&ta, &local));
                let q = quotient_by_hopf_ideal(&ta, &ideal).map_err(|_| not_normal())?;
                (q.quotient.clone(), Presentation::Dqg { quotient: q })
            }
        };
        Ok(Subquotient {
            top: top.clone(),
            bottom: bottom.clone(),
            algebra,
            presentation,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `Qg`: the subspace `O(T/B) ⊆ O(T)`.
    pub(crate) fn qg_space(&self) -> Option<&Subspace> {
        match &self.presentation {
            Presentation::Qg { space, .. } => Some(space),
            Presentation::Dqg { .. } => None,
        }
    }

    /// `Dqg`: the quotient `kT → kT/kT·kB⁻`.
    pub(crate) fn dqg_quotient(&self) -> Option<&QuotientPresentation> {
        match &self.presentation {
            Presentation::Qg { .. } => None,
            Presentation::Dqg { quotient, .. } => Some(quotient),
        }
    }
}

pub(crate) fn left_ideal(h: &Hopf, gens: &Subspace) -> Subspace {
    let n = h.dim();
    let mut b = crate::exactalg::EchelonBuilder::new(n);
    for g in gens.basis_vectors() {
        let g = crate::exactalg::SparseVec::from_dense(g);
        for i in 0..n {
            b.insert(h.left_mul_basis(i, &g).to_dense(n));
        }
    }
    b.finish()
}

/// Lift of a quotient basis vector to the ambient of the presentation.
fn lift(q: &QuotientPresentation, coords: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; q.parent.dim()];
    for (&k, c) in q.ideal.non_pivots().iter().zip(coords) {
        v[k] = c.clone();
    }
    v
}

/// The map between subquotients induced by the identity of the ambient.
/// `Qg`: `O(T₁/B₁) → O(T₂/B₂)` by restriction, for `T₂ ≤ T₁`.
/// `Dqg`: `kT₁/kT₁kB₁⁻ → kT₂/kT₂kB₂⁻` by inclusion, for `T₁ ≤ T₂`, `B₁ ≤ B₂`.
pub fn canonical_map(from: &Subquotient, to: &Subquotient) -> Result<StructuredMap> {
    let (d, e) = (from.dim(), to.dim());
    let mut m = Matrix::zeros(e, d);
    match (&from.presentation, &to.presentation) {
        (Presentation::Qg { top: t1, space: s1 }, Presentation::Qg { top: t2, space: s2 }) => {
            for (col, b) in s1.basis_vectors().enumerate() {
                let image = t2.projection.apply(&lift(t1, b));
                let coords = s2.membership(&image).ok_or_else(|| {
                    Error::TheoremViolation("restriction leaves the target subquotient".into())
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    m[(row, col)] = c;
                }
            }
        }
        (Presentation::Dqg { quotient: q1, .. }, Presentation::Dqg { quotient: q2, .. }) => {
            let ts1 = from.top.space();
            let ts2 = to.top.space();
            for (col, &r) in q1.ideal.non_pivots().iter().enumerate() {
                let in_ambient = ts1.basis_vector(r);
                let local = ts2.membership(in_ambient).ok_or_else(|| {
                    Error::TheoremViolation("inclusion leaves the target top".into())
                })?;
                for (row, c) in q2.projection.apply(&local).into_iter().enumerate() {
                    m[(row, col)] = c;
                }
            }
        }
        _ => {
            return Err(Error::PictureMismatch(
                "subquotients in different pictures".into(),
            ))
        }
    }
    Ok(StructuredMap::new(
        from.algebra.clone(),
        to.algebra.clone(),
        m,
    ))
}
