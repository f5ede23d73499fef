use crate::error::{Error, Result};
use crate::exactalg::{EchelonBuilder, Scalar, SparseVec, Subspace};
use crate::hopfcore::{project, HopfAlgebra};

use super::classify::{classify, coideal_defect, comult_slices};

/// Which closure operators [`generate_closed`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Closure {
    pub mult: bool,
    pub unit: bool,
    pub subcoalgebra: bool,
    pub antipode: bool,
}

impl Closure {
    pub const ALL: Closure = Closure {
        mult: true,
        unit: true,
        subcoalgebra: true,
        antipode: true,
    };
    pub const ALGEBRA: Closure = Closure {
        mult: true,
        unit: true,
        subcoalgebra: false,
        antipode: false,
    };
}

/// `A⁻ = A ∩ ker ε`.
pub fn minus_part(h: &HopfAlgebra, a: &Subspace) -> Subspace {
    a.kernel_of(|x| SparseVec::single(0, h.counit_of(x)))
}

/// Least subspace containing `gens` and closed under the requested operators.
pub fn generate_closed(h: &HopfAlgebra, gens: &Subspace, closure: Closure) -> Subspace {
    let n = h.dim();
    let mut b = EchelonBuilder::from_subspace(&Subspace::zero(n));
    let mut members: Vec<SparseVec> = Vec::new();
    let mut queue: Vec<SparseVec> = Vec::new();
    let push = |v: SparseVec, b: &mut EchelonBuilder, queue: &mut Vec<SparseVec>| {
        if !v.is_zero() && b.insert(v.to_dense(n)) {
            queue.push(v);
        }
    };
    if closure.unit {
        push(h.unit_sparse(), &mut b, &mut queue);
    }
    for g in gens.basis_vectors() {
        push(SparseVec::from_dense(g), &mut b, &mut queue);
    }
    while let Some(v) = queue.pop() {
        if closure.subcoalgebra {
            for s in comult_slices(h, &v, true)
                .into_iter()
                .chain(comult_slices(h, &v, false))
            {
                push(s, &mut b, &mut queue);
            }
        }
        if closure.antipode {
            push(h.apply_antipode_sparse(&v), &mut b, &mut queue);
        }
        if closure.mult {
            members.push(v.clone());
            let current = members.clone();
            for w in &current {
                push(h.mul_sparse(&v, w), &mut b, &mut queue);
                push(h.mul_sparse(w, &v), &mut b, &mut queue);
            }
        }
        if b.is_full() {
            break;
        }
    }
    b.finish()
}

/// `I1 + I2`, verified to be a Hopf ideal.
pub fn sum_of_hopf_ideals(h: &HopfAlgebra, i1: &Subspace, i2: &Subspace) -> Result<Subspace> {
    let s = i1.combine(i2, crate::exactalg::CombineMode::Sum)?;
    if !classify(h, &s).hopf_ideal() {
        return Err(Error::NotHopfIdeal("sum of the given ideals".into()));
    }
    Ok(s)
}

/// Greatest fixpoint of the shrinking step
/// `J ← {x ∈ J : ε(x) = 0, H x ⊆ J, x H ⊆ J, Δx ∈ J⊗H + H⊗J, Sx ∈ J, S⁻¹x ∈ J}`
/// started at `W`: the largest Hopf ideal inside `W`.
pub fn largest_hopf_ideal_within(
    h: &HopfAlgebra,
    w: &Subspace,
    require_s_inverse: bool,
) -> Subspace {
    let n = h.dim();
    let mut j = w.clone();
    loop {
        if j.is_zero() {
            return j;
        }
        let keep = j.non_pivots();
        let d = keep.len();
        let step = |x: &[Scalar]| {
            let x = SparseVec::from_dense(x);
            let mut out = SparseVec::single(0, h.counit_of_sparse(&x));
            let mut offset = 1;
            for i in 0..n {
                out.extend_shifted(&project(&j, &keep, &h.left_mul_basis(i, &x)), offset);
                offset += d;
                out.extend_shifted(&project(&j, &keep, &h.right_mul_basis(&x, i)), offset);
                offset += d;
            }
            out.extend_shifted(&project(&j, &keep, &h.apply_antipode_sparse(&x)), offset);
            offset += d;
            if require_s_inverse {
                out.extend_shifted(
                    &project(&j, &keep, &h.apply_antipode_inv_sparse(&x)),
                    offset,
                );
                offset += d;
            }
            out.extend_shifted(&coideal_defect(h, &j, &x), offset);
            out
        };
        let next = j.kernel_of(step);
        if next.dim() == j.dim() {
            return j;
        }
        j = next;
    }
}
