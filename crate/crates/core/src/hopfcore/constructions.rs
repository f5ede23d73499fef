//! Duals, op/cop variants, tensor products, restrictions to Hopf
//! subalgebras and induced structure on quotients.

use crate::error::{Error, Result};
use crate::exactalg::serial::FieldSpec;
use crate::exactalg::{Matrix, Scalar, SparseVec, Subspace};

use super::algebra::{format_combination, HopfAlgebra};
use super::validate::{assemble, RawHopf};

/// The one-dimensional Hopf algebra `k`.
pub fn trivial(field: FieldSpec) -> HopfAlgebra {
    let raw = RawHopf {
        field,
        labels: vec!["1".into()],
        mult: vec![SparseVec::single(0, Scalar::ONE)],
        unit: vec![Scalar::ONE],
        comult: vec![SparseVec::single(0, Scalar::ONE)],
        counit: vec![Scalar::ONE],
        antipode: Matrix::identity(1),
    };
    assemble(raw, Matrix::identity(1))
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

/// The dual Hopf algebra on the dual basis: structure tensors transposed.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    // (e^i e^j)(e_k) = coefficient of e_i⊗e_j in Δe_k
    let mut mult = vec![SparseVec::new(); n * n];
    for k in 0..n {
        for (p, c) in h.comult_basis(k).iter() {
            mult[p].add_term(k, c);
        }
    }
    let mut comult = vec![SparseVec::new(); n];
    for p in 0..n * n {
        for (k, c) in h.mult_basis(p / n, p % n).iter() {
            comult[k].add_term(p, c);
        }
    }
    let raw = RawHopf {
        field: h.field(),
        labels: h.labels().iter().map(|l| dual_label(l)).collect(),
        mult,
        unit: h.counit().to_vec(),
        comult,
        counit: h.unit().to_vec(),
        antipode: h.antipode().transpose(),
    };
    assemble(raw, h.antipode_inverse().transpose())
}

/// `H^op`, `H^cop` or `H^{op,cop}`. The antipode of a single flip is `S⁻¹`.
pub fn variant(h: &HopfAlgebra, opposite_mult: bool, opposite_comult: bool) -> HopfAlgebra {
    let n = h.dim();
    let mult = if opposite_mult {
        (0..n * n)
            .map(|p| h.mult_basis(p % n, p / n).clone())
            .collect()
    } else {
        h.mult_table().to_vec()
    };
    let comult = if opposite_comult {
        (0..n).map(|k| h.comult_op_basis(k)).collect()
    } else {
        h.comult_table().to_vec()
    };
    let (s, s_inv) = if opposite_mult ^ opposite_comult {
        (h.antipode_inverse().clone(), h.antipode().clone())
    } else {
        (h.antipode().clone(), h.antipode_inverse().clone())
    };
    let raw = RawHopf {
        field: h.field(),
        labels: h.labels().to_vec(),
        mult,
        unit: h.unit().to_vec(),
        comult,
        counit: h.counit().to_vec(),
        antipode: s,
    };
    assemble(raw, s_inv)
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n1, n2) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(n1 * n2, n1 * n2);
    for i in 0..n1 {
        for k in 0..n1 {
            let x = &a[(i, k)];
            if x.is_zero() {
                continue;
            }
            for j in 0..n2 {
                for l in 0..n2 {
                    let y = &b[(j, l)];
                    if !y.is_zero() {
                        out[(i * n2 + j, k * n2 + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// `H1 ⊗ H2`, basis `e_i⊗f_j ↦ i·n2 + j`.
pub fn tensor_product(h1: &HopfAlgebra, h2: &HopfAlgebra) -> Result<HopfAlgebra> {
    if h1.field() != h2.field() {
        return Err(Error::Schema("tensor factors over different fields".into()));
    }
    let (n1, n2) = (h1.dim(), h2.dim());
    let n = n1 * n2;
    let idx = |i: usize, j: usize| i * n2 + j;
    let mut mult = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let (a, b, c, d) = (p / n2, p % n2, q / n2, q % n2);
            let mut v = SparseVec::new();
            for (x, u) in h1.mult_basis(a, c).iter() {
                for (y, w) in h2.mult_basis(b, d).iter() {
                    v.add_term(idx(x, y), &(u * w));
                }
            }
            mult.push(v);
        }
    }
    let mut comult = Vec::with_capacity(n);
    for p in 0..n {
        let (a, b) = (p / n2, p % n2);
        let mut v = SparseVec::new();
        for (s, u) in h1.comult_basis(a).iter() {
            for (t, w) in h2.comult_basis(b).iter() {
                let left = idx(s / n1, t / n2);
                let right = idx(s % n1, t % n2);
                v.add_term(left * n + right, &(u * w));
            }
        }
        comult.push(v);
    }
    let pairwise = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        x.iter()
            .flat_map(|a| y.iter().map(move |b| a * b))
            .collect()
    };
    let labels = h1
        .labels()
        .iter()
        .flat_map(|a| h2.labels().iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let raw = RawHopf {
        field: h1.field(),
        labels,
        mult,
        unit: pairwise(h1.unit(), h2.unit()),
        comult,
        counit: pairwise(h1.counit(), h2.counit()),
        antipode: kron(h1.antipode(), h2.antipode()),
    };
    Ok(assemble(
        raw,
        kron(h1.antipode_inverse(), h2.antipode_inverse()),
    ))
}

fn restricted_label(labels: &[String], v: &[Scalar], k: usize) -> String {
    let terms = v.iter().filter(|c| !c.is_zero()).count();
    if terms <= 3 {
        format_combination(labels, v)
    } else {
        format!("v{k}")
    }
}

/// Coordinates of `x ∈ A` in the RREF basis of `A`, or `None` when `x ∉ A`.
fn coords_in(a: &Subspace, x: &SparseVec) -> Option<SparseVec> {
    if !a.contains_sparse(x) {
        return None;
    }
    Some(
        a.pivots()
            .iter()
            .enumerate()
            .filter_map(|(k, &p)| {
                let c = x.get(p);
                (!c.is_zero()).then_some((k, c))
            })
            .collect(),
    )
}

/// The Hopf algebra structure on a Hopf subalgebra `A`, with basis the RREF
/// rows of `A`. Closure under every structure map is verified.
pub fn restrict(h: &HopfAlgebra, a: &Subspace) -> Result<HopfAlgebra> {
    let n = h.dim();
    if a.ambient_dim() != n {
        return Err(Error::Ambient(crate::exactalg::subspace::AmbientMismatch(
            a.ambient_dim(),
            n,
        )));
    }
    let d = a.dim();
    let basis: Vec<SparseVec> = a.basis_vectors().map(SparseVec::from_dense).collect();
    let fail = |what: &str| Error::NotHopfSubalgebra(format!("not closed under {what}"));
    let mut mult = Vec::with_capacity(d * d);
    for s in 0..d {
        for t in 0..d {
            let prod = h.mul_sparse(&basis[s], &basis[t]);
            mult.push(coords_in(a, &prod).ok_or_else(|| fail("multiplication"))?);
        }
    }
    let unit = coords_in(a, &h.unit_sparse())
        .ok_or_else(|| fail("unit"))?
        .to_dense(d);
    let piv = a.pivots();
    let mut pos = vec![usize::MAX; n];
    for (k, &p) in piv.iter().enumerate() {
        pos[p] = k;
    }
    let mut comult = Vec::with_capacity(d);
    for b in &basis {
        let delta = h.comult_sparse(b);
        // coordinates in A⊗A are the entries at pivot pairs
        let local: SparseVec = delta
            .iter()
            .filter(|(p, _)| pos[p / n] != usize::MAX && pos[p % n] != usize::MAX)
            .map(|(p, c)| (pos[p / n] * d + pos[p % n], c.clone()))
            .collect();
        let mut back = SparseVec::new();
        for (q, c) in local.iter() {
            for (i, x) in basis[q / d].iter() {
                for (j, y) in basis[q % d].iter() {
                    back.add_term(i * n + j, &(&(c * x) * y));
                }
            }
        }
        if back != delta {
            return Err(fail("comultiplication"));
        }
        comult.push(local);
    }
    let counit = basis.iter().map(|b| h.counit_of_sparse(b)).collect();
    let mut s_cols = Vec::with_capacity(d);
    let mut si_cols = Vec::with_capacity(d);
    for b in &basis {
        s_cols.push(coords_in(a, &h.apply_antipode_sparse(b)).ok_or_else(|| fail("antipode"))?);
        si_cols.push(
            coords_in(a, &h.apply_antipode_inv_sparse(b))
                .ok_or_else(|| fail("inverse antipode"))?,
        );
    }
    let labels = a
        .basis_vectors()
        .enumerate()
        .map(|(k, v)| restricted_label(h.labels(), v, k))
        .collect();
    let raw = RawHopf {
        field: h.field(),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::from_sparse_columns(d, &s_cols),
    };
    Ok(assemble(raw, Matrix::from_sparse_columns(d, &si_cols)))
}

/// The structure induced on `H/I` for a Hopf ideal `I`, on the basis of
/// classes of the non-pivot coordinates of `I`. The caller guarantees `I`
/// is a Hopf ideal.
pub(crate) fn quotient_structure(h: &HopfAlgebra, ideal: &Subspace) -> HopfAlgebra {
    let n = h.dim();
    let keep = ideal.non_pivots();
    let d = keep.len();
    let proj: Vec<SparseVec> = (0..n)
        .map(|i| project(ideal, &keep, &SparseVec::single(i, Scalar::ONE)))
        .collect();
    let apply = |v: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &proj[i]);
        }
        out
    };
    let mut mult = Vec::with_capacity(d * d);
    for &s in &keep {
        for &t in &keep {
            mult.push(apply(h.mult_basis(s, t)));
        }
    }
    let mut comult = Vec::with_capacity(d);
    for &q in &keep {
        let mut v = SparseVec::new();
        for (p, c) in h.comult_basis(q).iter() {
            for (a, x) in proj[p / n].iter() {
                for (b, y) in proj[p % n].iter() {
                    v.add_term(a * d + b, &(&(c * x) * y));
                }
            }
        }
        comult.push(v);
    }
    let s_cols: Vec<SparseVec> = keep
        .iter()
        .map(|&q| apply(&SparseVec::from_dense(&h.antipode().column(q))))
        .collect();
    let si_cols: Vec<SparseVec> = keep
        .iter()
        .map(|&q| apply(&SparseVec::from_dense(&h.antipode_inverse().column(q))))
        .collect();
    let raw = RawHopf {
        field: h.field(),
        labels: keep.iter().map(|&q| h.label(q).to_string()).collect(),
        mult,
        unit: apply(&h.unit_sparse()).to_dense(d),
        comult,
        counit: keep.iter().map(|&q| h.counit()[q].clone()).collect(),
        antipode: Matrix::from_sparse_columns(d, &s_cols),
    };
    assemble(raw, Matrix::from_sparse_columns(d, &si_cols))
}

/// Quotient coordinates of `x` modulo `w`, indexed by `keep = w.non_pivots()`.
pub(crate) fn project(w: &Subspace, keep: &[usize], x: &SparseVec) -> SparseVec {
    let r = w.reduce_sparse(x);
    keep.iter()
        .enumerate()
        .filter_map(|(t, &q)| {
            let c = r.get(q);
            (!c.is_zero()).then_some((t, c))
        })
        .collect()
}
