use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{EchelonBuilder, Matrix, Scalar, SparseVec, Subspace};
use crate::hopfcore::{project, quotient_structure, Hopf, StructuredMap};

use super::classify::{classify, coideal_defect};
use super::closure::minus_part;

/// `H → H/I` with the quotient basis taken at the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub parent: Hopf,
    pub ideal: Subspace,
    pub quotient: Hopf,
    pub projection: StructuredMap,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

pub fn quotient_by_hopf_ideal(h: &Hopf, ideal: &Subspace) -> Result<QuotientPresentation> {
    let c = classify(h, ideal);
    if !c.hopf_ideal() {
        return Err(Error::NotHopfIdeal(describe_failure(&c)));
    }
    let quotient: Hopf = Arc::new(quotient_structure(h, ideal));
    let projection = StructuredMap::new(h.clone(), quotient.clone(), ideal.quotient_matrix());
    debug_assert!(projection.flags().is_hopf_map());
    Ok(QuotientPresentation {
        parent: h.clone(),
        ideal: ideal.clone(),
        quotient,
        projection,
    })
}

fn describe_failure(c: &crate::subobj::ClassifiedSubspace) -> String {
    let mut missing = Vec::new();
    if !c.two_sided_ideal {
        missing.push("two-sided ideal");
    }
    if !c.coideal_ideal {
        missing.push("coideal");
    }
    if !c.antipode_stable {
        missing.push("antipode-stable");
    }
    if !c.antipode_inverse_stable {
        missing.push("inverse-antipode-stable");
    }
    format!("not {}", missing.join(", not "))
}

/// `H/HA⁻` for a right coideal subalgebra `A`: a left `H`-module quotient
/// coalgebra, stored on the non-pivot basis of `HA⁻`.
#[derive(Clone, Debug)]
pub struct ModuleQuotient {
    pub parent: Hopf,
    pub subalgebra: Subspace,
    pub kernel: Subspace,
    pub labels: Vec<String>,
    /// Flattened `d×d` coproduct of each quotient basis vector.
    pub comult: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
    /// `d × dim H` matrix of the projection.
    pub projection: Matrix,
}

impl ModuleQuotient {
    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn project(&self, x: &SparseVec) -> SparseVec {
        project(&self.kernel, &self.kernel.non_pivots(), x)
    }

    /// Image of the unit: the distinguished grouplike `π(1)`.
    pub fn unit_class(&self) -> SparseVec {
        self.project(&self.parent.unit_sparse())
    }

    /// Action `h · π(x) = π(hx)` of a basis element on a quotient basis vector.
    pub fn act(&self, i: usize, q: usize) -> SparseVec {
        let rep = self.kernel.non_pivots()[q];
        self.project(self.parent.mult_basis(i, rep))
    }
}

pub fn quotient_module_coalgebra(h: &Hopf, a: &Subspace) -> Result<ModuleQuotient> {
    let c = classify(h, a);
    if !(c.subalgebra && c.right_coideal) {
        let what = if c.subalgebra {
            "not a right coideal"
        } else {
            "not a unital subalgebra"
        };
        return Err(Error::NotCoidealSubalgebra(what.into()));
    }
    let minus = minus_part(h, a);
    let n = h.dim();
    let gens: Vec<SparseVec> = minus.basis_vectors().map(SparseVec::from_dense).collect();
    let mut span = EchelonBuilder::new(n);
    'outer: for g in &gens {
        for i in 0..n {
            span.insert(h.left_mul_basis(i, g).to_dense(n));
            if span.is_full() {
                break 'outer;
            }
        }
    }
    let kernel = span.finish();
    // HA⁻ is a coideal because A is a right coideal; checked rather than assumed
    for x in kernel.basis_vectors() {
        let x = SparseVec::from_dense(x);
        if !h.counit_of_sparse(&x).is_zero() || !coideal_defect(h, &kernel, &x).is_zero() {
            return Err(Error::NotCoidealSubalgebra("HA⁻ is not a coideal".into()));
        }
    }
    let keep = kernel.non_pivots();
    let d = keep.len();
    let mut comult = Vec::with_capacity(d);
    for &q in &keep {
        let mut v = SparseVec::new();
        for (p, coef) in h.comult_basis(q).iter() {
            let left = project(&kernel, &keep, &SparseVec::single(p / n, Scalar::ONE));
            if left.is_zero() {
                continue;
            }
            let right = project(&kernel, &keep, &SparseVec::single(p % n, Scalar::ONE));
            for (s, x) in left.iter() {
                for (t, y) in right.iter() {
                    v.add_term(s * d + t, &(&(coef * x) * y));
                }
            }
        }
        comult.push(v);
    }
    Ok(ModuleQuotient {
        parent: h.clone(),
        subalgebra: a.clone(),
        labels: keep.iter().map(|&q| h.label(q).to_string()).collect(),
        counit: keep.iter().map(|&q| h.counit()[q].clone()).collect(),
        projection: kernel.quotient_matrix(),
        kernel,
        comult,
    })
}
