use crate::error::{Error, Result};
use crate::exactalg::{Scalar, SparseVec, Subspace};
use crate::hopfcore::{Hopf, HopfAlgebra};
use crate::subobj::QuotientPresentation;

use super::codual::QuotientMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdSide {
    /// `a ◁ x = S(x₁) a x₂`
    Right,
    /// `x ▷ a = x₁ a S(x₂)`
    Left,
}

/// A basis element `x` and a vector `a ∈ A` whose adjoint image leaves `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdWitness {
    pub x: usize,
    pub x_label: String,
    pub a: Vec<Scalar>,
    pub image: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdInvariance {
    pub invariant: bool,
    pub witness: Option<AdWitness>,
}

/// Adjoint action of the basis element `x` on `a`.
pub fn ad_action(h: &HopfAlgebra, x: usize, a: &SparseVec, side: AdSide) -> SparseVec {
    let n = h.dim();
    let mut out = SparseVec::new();
    for (p, c) in h.comult_basis(x).iter() {
        let (i, j) = (p / n, p % n);
        let term = match side {
            AdSide::Right => {
                let s = h.apply_antipode_sparse(&SparseVec::single(i, Scalar::ONE));
                h.mul_sparse(&h.mul_sparse(&s, a), &SparseVec::single(j, Scalar::ONE))
            }
            AdSide::Left => {
                let s = h.apply_antipode_sparse(&SparseVec::single(j, Scalar::ONE));
                h.mul_sparse(&h.left_mul_basis(i, a), &s)
            }
        };
        out.axpy(c, &term);
    }
    out
}

pub fn ad_invariance(h: &HopfAlgebra, a: &Subspace, side: AdSide) -> AdInvariance {
    let n = h.dim();
    for x in 0..n {
        for b in a.basis_vectors() {
            let img = ad_action(h, x, &SparseVec::from_dense(b), side);
            if !a.contains_sparse(&img) {
                let witness = AdWitness {
                    x,
                    x_label: h.label(x).to_string(),
                    a: b.to_vec(),
                    image: img.to_dense(n),
                };
                return AdInvariance {
                    invariant: false,
                    witness: Some(witness),
                };
            }
        }
    }
    AdInvariance {
        invariant: true,
        witness: None,
    }
}

/// A left coaction `ρ: C → H⊗C`, stored as images of the basis of `C`
/// flattened as `i·dim C + c`.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub ambient: Hopf,
    pub images: Vec<SparseVec>,
}

impl Coaction {
    pub fn target_dim(&self) -> usize {
        self.images.len()
    }

    /// `(Δ⊗id)ρ = (id⊗ρ)ρ`.
    pub fn is_coassociative(&self) -> bool {
        let h = &self.ambient;
        let (n, d) = (h.dim(), self.target_dim());
        self.images.iter().all(|r| {
            let mut lhs = SparseVec::new();
            let mut rhs = SparseVec::new();
            for (p, c) in r.iter() {
                let (i, s) = (p / d, p % d);
                for (q, y) in h.comult_basis(i).iter() {
                    lhs.add_term(q * d + s, &(c * y));
                }
                for (q, y) in self.images[s].iter() {
                    rhs.add_term((i * n) * d + q, &(c * y));
                }
            }
            lhs == rhs
        })
    }

    /// `(ε⊗id)ρ = id`.
    pub fn is_counital(&self) -> bool {
        let d = self.target_dim();
        self.images.iter().enumerate().all(|(s, r)| {
            let mut v = SparseVec::new();
            for (p, c) in r.iter() {
                v.add_term(p % d, &(c * &self.ambient.counit()[p / d]));
            }
            v == SparseVec::single(s, Scalar::ONE)
        })
    }
}

/// `x₁S(x₃)⊗x₂` in `H⊗H`.
fn coadjoint(h: &HopfAlgebra, x: &SparseVec) -> SparseVec {
    let n = h.dim();
    let mut out = SparseVec::new();
    for (p, c) in h.comult_sparse(x).iter() {
        let (a, rest) = (p / n, p % n);
        for (q, y) in h.comult_basis(rest).iter() {
            let (b, e) = (q / n, q % n);
            let s = h.apply_antipode_sparse(&SparseVec::single(e, Scalar::ONE));
            let prod = h.left_mul_basis(a, &s);
            let k = c * y;
            for (i, z) in prod.iter() {
                out.add_term(i * n + b, &(&k * z));
            }
        }
    }
    out
}

/// Pushes the coadjoint coaction of `H` through `π: H → C`; fails unless
/// `ker π` is a subcomodule.
pub fn coadjoint_descends(q: &QuotientPresentation) -> Result<Coaction> {
    let h = &q.parent;
    let (n, d) = (h.dim(), q.target_dim());
    let push = |v: &SparseVec| {
        let mut out = SparseVec::new();
        let mut by_left: std::collections::BTreeMap<usize, SparseVec> = Default::default();
        for (p, c) in v.iter() {
            by_left.entry(p / n).or_default().add_term(p % n, c);
        }
        for (i, right) in by_left {
            for (s, c) in q.project(&right).iter() {
                out.add_term(i * d + s, c);
            }
        }
        out
    };
    for k in q.ideal.basis_vectors() {
        let img = push(&coadjoint(h, &SparseVec::from_dense(k)));
        if !img.is_zero() {
            return Err(Error::DescentFailure(format!(
                "coadjoint image of a kernel element is nonzero in H⊗C ({} terms)",
                img.nnz()
            )));
        }
    }
    let images = q
        .ideal
        .non_pivots()
        .into_iter()
        .map(|rep| push(&coadjoint(h, &SparseVec::single(rep, Scalar::ONE))))
        .collect();
    Ok(Coaction {
        ambient: h.clone(),
        images,
    })
}
