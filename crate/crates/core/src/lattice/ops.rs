use std::collections::HashMap;
use std::sync::Mutex;

use crate::duality::{ad_action, normality, AdSide, Normality, NormalityInput};
use crate::error::{Error, Result};
use crate::exactalg::{CombineMode, Scalar, SparseVec, Subspace};
use crate::hopfcore::HopfAlgebra;
use crate::subobj::{
    generate_closed, largest_hopf_ideal_within, quotient_by_hopf_ideal, sum_of_hopf_ideals, Closure,
};

use super::subgroup::{Picture, QuantumSubgroup};

/// `a ≤ b`: kernel reversal in `Qg`, inclusion in `Dqg`.
pub fn leq(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<bool> {
    a.same_frame(b)?;
    Ok(match a.picture() {
        Picture::Qg => b.space().is_subspace_of(a.space()),
        Picture::Dqg => a.space().is_subspace_of(b.space()),
    })
}

pub fn meet(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    a.same_frame(b)?;
    let h = a.ambient();
    let space = match a.picture() {
        Picture::Qg => sum_of_hopf_ideals(h, a.space(), b.space())?,
        Picture::Dqg => a.space().combine(b.space(), CombineMode::Intersect)?,
    };
    Ok(a.with_space(space))
}

pub fn join(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    a.same_frame(b)?;
    let h = a.ambient();
    let space = match a.picture() {
        Picture::Qg => largest_hopf_ideal_within(h, &a.space().intersect(b.space()), true),
        Picture::Dqg => generate_closed(h, &a.space().sum(b.space()), Closure::ALL),
    };
    Ok(a.with_space(space))
}

fn require(p: Picture, a: &QuantumSubgroup) -> Result<()> {
    if a.picture() != p {
        return Err(Error::PictureMismatch(format!(
            "expected {p}, got {}",
            a.picture()
        )));
    }
    Ok(())
}

pub fn meet_qg(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    require(Picture::Qg, a)?;
    meet(a, b)
}

pub fn join_qg(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    require(Picture::Qg, a)?;
    join(a, b)
}

pub fn meet_dqg(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    require(Picture::Dqg, a)?;
    meet(a, b)
}

pub fn join_dqg(a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
    require(Picture::Dqg, a)?;
    join(a, b)
}

/// Adjoint action of an arbitrary vector `x`, linear in `x`.
fn ad_vec(h: &HopfAlgebra, x: &[Scalar], a: &SparseVec, side: AdSide) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            out.axpy(c, &ad_action(h, i, a, side));
        }
    }
    out
}

/// `L` normalizes `M`. `Dqg`: `kM` is stable under both adjoint actions of
/// `kL`. `Qg`: `M` is normal in `M ∨ L`.
pub fn normalizes(l: &QuantumSubgroup, m: &QuantumSubgroup) -> Result<bool> {
    l.same_frame(m)?;
    let h = l.ambient();
    match l.picture() {
        Picture::Dqg => {
            for x in l.space().basis_vectors() {
                for a in m.space().basis_vectors() {
                    let a = SparseVec::from_dense(a);
                    for side in [AdSide::Right, AdSide::Left] {
                        if !m.space().contains_sparse(&ad_vec(h, x, &a, side)) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        Picture::Qg => {
            let j = join(m, l)?;
            relative_normal(m, &j)
        }
    }
}

/// `M ⊴ J` for `M ≤ J` in the `Qg` picture, decided inside `O(J)`.
fn relative_normal(m: &QuantumSubgroup, j: &QuantumSubgroup) -> Result<bool> {
    let qj = j.quotient().expect("Qg picture");
    let image = m.space().image_under(qj.projection.matrix());
    let qm = quotient_by_hopf_ideal(&qj.quotient, &image)?;
    Ok(normality(&qj.quotient, NormalityInput::Quotient(&qm))?.is_normal())
}

/// Decides `M ⊴ J` inside the algebra of `J`, keeping the exact sequence or
/// the adjoint witness. Labels of the witness are ambient labels.
pub fn normality_in(m: &QuantumSubgroup, j: &QuantumSubgroup) -> Result<Normality> {
    if !leq(m, j)? {
        return Err(Error::NotContained(
            "subgroup is not below its claimed container".into(),
        ));
    }
    match m.picture() {
        Picture::Dqg => normality(
            j.algebra(),
            NormalityInput::Subalgebra(&m.space().relative_to(j.space())),
        ),
        Picture::Qg => {
            let qj = j.quotient().expect("Qg picture");
            let image = m.space().image_under(qj.projection.matrix());
            let qm = quotient_by_hopf_ideal(&qj.quotient, &image)?;
            normality(&qj.quotient, NormalityInput::Quotient(&qm))
        }
    }
}

/// `M ⊴ J`: `M ≤ J` and `J` normalizes `M`.
pub fn is_normal_in(m: &QuantumSubgroup, j: &QuantumSubgroup) -> Result<bool> {
    if !leq(m, j)? {
        return Ok(false);
    }
    match m.picture() {
        Picture::Dqg => normalizes(j, m),
        Picture::Qg => relative_normal(m, j),
    }
}

/// Memoized lattice operations over one ambient and picture, for surveys.
/// Keys are the presenting subspaces.
#[derive(Default)]
pub struct LatticeMemo {
    meets: Mutex<HashMap<(Subspace, Subspace), Subspace>>,
    joins: Mutex<HashMap<(Subspace, Subspace), Subspace>>,
    normalizing: Mutex<HashMap<(Subspace, Subspace), bool>>,
}

impl LatticeMemo {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(a: &QuantumSubgroup, b: &QuantumSubgroup) -> (Subspace, Subspace) {
        // meet and join are commutative
        if a.space() <= b.space() {
            (a.space().clone(), b.space().clone())
        } else {
            (b.space().clone(), a.space().clone())
        }
    }

    pub fn meet(&self, a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
        let k = Self::key(a, b);
        if let Some(s) = self.meets.lock().unwrap().get(&k) {
            return Ok(a.with_space(s.clone()));
        }
        let r = meet(a, b)?;
        self.meets.lock().unwrap().insert(k, r.space().clone());
        Ok(r)
    }

    pub fn join(&self, a: &QuantumSubgroup, b: &QuantumSubgroup) -> Result<QuantumSubgroup> {
        let k = Self::key(a, b);
        if let Some(s) = self.joins.lock().unwrap().get(&k) {
            return Ok(a.with_space(s.clone()));
        }
        let r = join(a, b)?;
        self.joins.lock().unwrap().insert(k, r.space().clone());
        Ok(r)
    }

    pub fn normalizes(&self, l: &QuantumSubgroup, m: &QuantumSubgroup) -> Result<bool> {
        let k = (l.space().clone(), m.space().clone());
        if let Some(&b) = self.normalizing.lock().unwrap().get(&k) {
            return Ok(b);
        }
        let r = normalizes(l, m)?;
        self.normalizing.lock().unwrap().insert(k, r);
        Ok(r)
    }
}
