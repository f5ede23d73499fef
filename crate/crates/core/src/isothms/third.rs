use crate::error::{Error, Result};
use crate::exactalg::{vector, Matrix, Scalar};
use crate::hopfcore::{Hopf, StructuredMap};
use crate::lattice::{leq, Picture, QuantumSubgroup};

use super::certificate::{IsoCertificate, Theorem};
use super::subquotient::Subquotient;

#[derive(Clone, Debug)]
pub struct ThirdIso {
    /// `H/N` as a quantum subgroup of `G/N`.
    pub h_mod_n: QuantumSubgroup,
    /// `(G/N)/(H/N)`
    pub double_quotient: Hopf,
    /// `G/H`
    pub quotient: Hopf,
    pub certificate: IsoCertificate,
}

/// `(G/N)/(H/N) ≅ G/H` for `N ≤ H`, both normal in `G`.
pub fn third_iso(n: &QuantumSubgroup, h: &QuantumSubgroup) -> Result<ThirdIso> {
    if !leq(n, h)? {
        return Err(Error::NotContained("N is not contained in H".into()));
    }
    for (name, x) in [("N", n), ("H", h)] {
        if !x.is_normal() {
            return Err(Error::NotNormal(format!(
                "{name} is not normal in the ambient"
            )));
        }
    }
    let picture = n.picture();
    let g = n.ambient();
    let whole = QuantumSubgroup::whole(g, picture);
    let g_mod_n = Subquotient::new(&whole, n)?;
    let g_mod_h = Subquotient::new(&whole, h)?;
    let outer = QuantumSubgroup::whole(&g_mod_n.algebra, picture);
    let (h_mod_n, matrix_of) = match picture {
        Picture::Qg => {
            // O(G/N) ⊆ O(G); H/N is cut out by ker π_H inside it
            let a_n = g_mod_n.qg_space().unwrap();
            let kernel = h.space().intersect(a_n).relative_to(a_n);
            (QuantumSubgroup::qg(&g_mod_n.algebra, kernel)?, Picture::Qg)
        }
        Picture::Dqg => {
            let q1 = g_mod_n.dqg_quotient().unwrap();
            let image = h.space().image_under(q1.projection.matrix());
            (QuantumSubgroup::dqg(&g_mod_n.algebra, image)?, Picture::Dqg)
        }
    };
    if !h_mod_n.is_normal() {
        return Err(Error::TheoremViolation("H/N is not normal in G/N".into()));
    }
    let double = Subquotient::new(&outer, &h_mod_n)?;
    let (d, e) = (double.dim(), g_mod_h.dim());
    let mut m = Matrix::zeros(e, d);
    match matrix_of {
        Picture::Qg => {
            let a_n = g_mod_n.qg_space().unwrap();
            let target = g_mod_h.qg_space().unwrap();
            for (col, b) in double.qg_space().unwrap().basis_vectors().enumerate() {
                let mut v = vector::zeros(g.dim());
                for (t, c) in b.iter().enumerate() {
                    vector::axpy(&mut v, c, a_n.basis_vector(t));
                }
                let coords = target.membership(&v).ok_or_else(|| {
                    Error::TheoremViolation("(G/N)/(H/N) is not inside O(G/H)".into())
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    m[(row, col)] = c;
                }
            }
        }
        Picture::Dqg => {
            let q1 = g_mod_n.dqg_quotient().unwrap();
            let q2 = double.dqg_quotient().unwrap();
            let q3 = g_mod_h.dqg_quotient().unwrap();
            let reps1 = q1.ideal.non_pivots();
            for (col, &r) in q2.ideal.non_pivots().iter().enumerate() {
                let mut v = vector::zeros(g.dim());
                v[reps1[r]] = Scalar::ONE;
                for (row, c) in q3.projection.apply(&v).into_iter().enumerate() {
                    m[(row, col)] = c;
                }
            }
        }
    }
    let map = StructuredMap::new(double.algebra.clone(), g_mod_h.algebra.clone(), m);
    let certificate = IsoCertificate::new(map, Theorem::ThirdIso)?;
    Ok(ThirdIso {
        h_mod_n,
        double_quotient: double.algebra,
        quotient: g_mod_h.algebra,
        certificate,
    })
}
