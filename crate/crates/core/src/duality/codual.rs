use crate::error::Result;
use crate::exactalg::{Scalar, SparseVec, Subspace};
use crate::hopfcore::{project, Hopf};
use crate::subobj::{
    classify, quotient_by_hopf_ideal, quotient_module_coalgebra, ModuleQuotient,
    QuotientPresentation,
};

/// A surjection `π: H → C` onto a quotient presented on the non-pivot basis of its kernel.
pub trait QuotientMap {
    fn parent(&self) -> &Hopf;
    fn kernel(&self) -> &Subspace;

    fn target_dim(&self) -> usize {
        self.parent().dim() - self.kernel().dim()
    }

    fn project(&self, x: &SparseVec) -> SparseVec {
        project(self.kernel(), &self.kernel().non_pivots(), x)
    }
}

impl QuotientMap for QuotientPresentation {
    fn parent(&self) -> &Hopf {
        &self.parent
    }
    fn kernel(&self) -> &Subspace {
        &self.ideal
    }
}

impl QuotientMap for ModuleQuotient {
    fn parent(&self) -> &Hopf {
        &self.parent
    }
    fn kernel(&self) -> &Subspace {
        &self.kernel
    }
}

/// `cd(A) = H/HA⁻`, a Hopf quotient exactly when `HA⁻` is a Hopf ideal.
#[derive(Clone, Debug)]
pub enum CdQuotient {
    Hopf(QuotientPresentation),
    Module(ModuleQuotient),
}

impl CdQuotient {
    pub fn is_hopf(&self) -> bool {
        matches!(self, CdQuotient::Hopf(_))
    }

    pub fn as_hopf(&self) -> Option<&QuotientPresentation> {
        match self {
            CdQuotient::Hopf(q) => Some(q),
            CdQuotient::Module(_) => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.target_dim()
    }
}

impl QuotientMap for CdQuotient {
    fn parent(&self) -> &Hopf {
        match self {
            CdQuotient::Hopf(q) => &q.parent,
            CdQuotient::Module(q) => &q.parent,
        }
    }
    fn kernel(&self) -> &Subspace {
        match self {
            CdQuotient::Hopf(q) => &q.ideal,
            CdQuotient::Module(q) => &q.kernel,
        }
    }
}

pub fn cd_of_subalgebra(h: &Hopf, a: &Subspace) -> Result<CdQuotient> {
    let m = quotient_module_coalgebra(h, a)?;
    if classify(h, &m.kernel).hopf_ideal() {
        return Ok(CdQuotient::Hopf(quotient_by_hopf_ideal(h, &m.kernel)?));
    }
    Ok(CdQuotient::Module(m))
}

/// `cd(π) = {x : π(x₁)⊗x₂ = π(1)⊗x}`.
pub fn cd_of_quotient<Q: QuotientMap + ?Sized>(q: &Q) -> Subspace {
    let h = q.parent();
    let n = h.dim();
    let images: Vec<SparseVec> = (0..n)
        .map(|i| q.project(&SparseVec::single(i, Scalar::ONE)))
        .collect();
    let unit = q.project(&h.unit_sparse());
    // C⊗H flattened as c·n + j
    let condition = |x: &[Scalar]| {
        let x = SparseVec::from_dense(x);
        let mut out = SparseVec::new();
        for (p, c) in h.comult_sparse(&x).iter() {
            for (s, y) in images[p / n].iter() {
                out.add_term(s * n + p % n, &(c * y));
            }
        }
        for (s, u) in unit.iter() {
            for (j, c) in x.iter() {
                out.add_term(s * n + j, &-(u * c));
            }
        }
        out
    };
    Subspace::full(n).kernel_of(condition)
}
