//! Integrals, Haar functionals and the conditional expectations onto
//! coideal subalgebras attached to cosemisimple quotients.

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, SparseVec, Subspace};
use crate::hopfcore::{dual, HopfAlgebra, StructuredMap};
use crate::subobj::QuotientPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// `xΛ = ε(x)Λ`; scaled to `ε(Λ) = 1` when possible, otherwise to a
    /// leading coefficient 1.
    pub left_integral: Vec<Scalar>,
    /// `(id⊗λ)Δ = λ(·)1`; scaled to `λ(1) = 1` when possible.
    pub haar_functional: Vec<Scalar>,
    pub semisimple: bool,
    pub cosemisimple: bool,
}

fn normalize(v: Vec<Scalar>, pairing: &[Scalar]) -> (Vec<Scalar>, bool) {
    let p = crate::exactalg::vector::dot(&v, pairing);
    let scale = if p.is_zero() {
        v.iter()
            .find(|c| !c.is_zero())
            .expect("integral is nonzero")
            .inv()
            .unwrap()
    } else {
        p.inv().unwrap()
    };
    (v.iter().map(|c| c * &scale).collect(), !p.is_zero())
}

/// The unique-up-to-scale left integral of `h`.
fn left_integral(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let n = h.dim();
    let space = Subspace::full(n).kernel_of(|x| {
        let x = SparseVec::from_dense(x);
        let mut out = SparseVec::new();
        for i in 0..n {
            let mut v = h.left_mul_basis(i, &x);
            v.axpy(&-&h.counit()[i], &x);
            out.extend_shifted(&v, i * n);
        }
        out
    });
    if space.dim() != 1 {
        return Err(Error::IntegralDimension(space.dim()));
    }
    Ok(space.basis_vector(0).to_vec())
}

pub fn integral(h: &HopfAlgebra) -> Result<IntegralData> {
    let (left, semisimple) = normalize(left_integral(h)?, h.counit());
    // a left integral of H* is a covector λ with (id⊗λ)Δ = λ(·)1
    let (haar, cosemisimple) = normalize(left_integral(&dual(h))?, h.unit());
    Ok(IntegralData {
        left_integral: left,
        haar_functional: haar,
        semisimple,
        cosemisimple,
    })
}

pub fn haar(h: &HopfAlgebra) -> Result<Vec<Scalar>> {
    let d = integral(h)?;
    if !d.cosemisimple {
        return Err(Error::NotCosemisimple);
    }
    Ok(d.haar_functional)
}

pub fn cosemisimple_test(h: &HopfAlgebra) -> bool {
    integral(h).is_ok_and(|d| d.cosemisimple)
}

/// `E_K(x) = h_K(π(x₁)) x₂`, an endomorphism of the parent onto `cd(π)`.
pub fn expectation(q: &QuotientPresentation) -> Result<StructuredMap> {
    let h = &q.parent;
    let n = h.dim();
    let h_k = haar(&q.quotient)?;
    let pulled = q.projection.matrix().transpose().mul_vec(&h_k);
    let mut m = Matrix::zeros(n, n);
    for x in 0..n {
        for (p, c) in h.comult_basis(x).iter() {
            let w = &pulled[p / n];
            if !w.is_zero() {
                m[(p % n, x)] = &m[(p % n, x)] + &(c * w);
            }
        }
    }
    Ok(StructuredMap::new(h.clone(), h.clone(), m))
}
