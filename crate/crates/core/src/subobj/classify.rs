use crate::exactalg::{Scalar, SparseVec, Subspace};
use crate::hopfcore::{project, HopfAlgebra};

/// Structural flags of a subspace `W ⊆ H`, each decided by membership tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedSubspace {
    pub space: Subspace,
    pub contains_unit: bool,
    /// Unital subalgebra: contains 1 and closed under multiplication.
    pub subalgebra: bool,
    /// `Δ(W) ⊆ H⊗W`.
    pub left_coideal: bool,
    /// `Δ(W) ⊆ W⊗H`.
    pub right_coideal: bool,
    pub subcoalgebra: bool,
    pub antipode_stable: bool,
    pub antipode_inverse_stable: bool,
    /// `Δ(W) ⊆ W⊗H + H⊗W` and `ε(W) = 0`.
    pub coideal_ideal: bool,
    pub two_sided_ideal: bool,
}

impl ClassifiedSubspace {
    pub fn hopf_subalgebra(&self) -> bool {
        self.contains_unit && self.subalgebra && self.subcoalgebra && self.antipode_stable
    }

    pub fn hopf_ideal(&self) -> bool {
        self.two_sided_ideal
            && self.coideal_ideal
            && self.antipode_stable
            && self.antipode_inverse_stable
    }

    pub fn right_coideal_subalgebra(&self) -> bool {
        self.subalgebra && self.right_coideal
    }
}

/// Slices of `Δx`: `(f⊗id)Δx` for each dual-basis covector `f` when
/// `left_factor` is false, `(id⊗f)Δx` otherwise.
pub(crate) fn comult_slices(h: &HopfAlgebra, x: &SparseVec, keep_left: bool) -> Vec<SparseVec> {
    let n = h.dim();
    let mut slices: std::collections::BTreeMap<usize, SparseVec> = Default::default();
    for (p, c) in h.comult_sparse(x).iter() {
        let (i, j) = (p / n, p % n);
        let (key, idx) = if keep_left { (j, i) } else { (i, j) };
        slices.entry(key).or_default().add_term(idx, c);
    }
    slices.into_values().filter(|v| !v.is_zero()).collect()
}

/// `(Q⊗Q)Δx` for the quotient map `Q` modulo `w`; zero iff `Δx ∈ w⊗H + H⊗w`.
pub fn coideal_defect(h: &HopfAlgebra, w: &Subspace, x: &SparseVec) -> SparseVec {
    let n = h.dim();
    let keep = w.non_pivots();
    let d = keep.len();
    let delta = h.comult_sparse(x);
    let mut cache: std::collections::HashMap<usize, SparseVec> = Default::default();
    let mut out = SparseVec::new();
    for (p, c) in delta.iter() {
        let (i, j) = (p / n, p % n);
        let qi = cache
            .entry(i)
            .or_insert_with(|| project(w, &keep, &SparseVec::single(i, Scalar::ONE)))
            .clone();
        if qi.is_zero() {
            continue;
        }
        let qj = cache
            .entry(j)
            .or_insert_with(|| project(w, &keep, &SparseVec::single(j, Scalar::ONE)))
            .clone();
        for (a, x) in qi.iter() {
            for (b, y) in qj.iter() {
                out.add_term(a * d + b, &(&(c * x) * y));
            }
        }
    }
    out
}

pub fn classify(h: &HopfAlgebra, w: &Subspace) -> ClassifiedSubspace {
    assert_eq!(
        w.ambient_dim(),
        h.dim(),
        "subspace ambient dimension must equal algebra dimension"
    );
    let n = h.dim();
    let basis: Vec<SparseVec> = w.basis_vectors().map(SparseVec::from_dense).collect();
    let contains_unit = w.contains(h.unit());
    let closed = basis
        .iter()
        .all(|a| basis.iter().all(|b| w.contains_sparse(&h.mul_sparse(a, b))));
    let right_coideal = basis.iter().all(|x| {
        comult_slices(h, x, true)
            .iter()
            .all(|s| w.contains_sparse(s))
    });
    let left_coideal = basis.iter().all(|x| {
        comult_slices(h, x, false)
            .iter()
            .all(|s| w.contains_sparse(s))
    });
    let antipode_stable = basis
        .iter()
        .all(|x| w.contains_sparse(&h.apply_antipode_sparse(x)));
    let antipode_inverse_stable = basis
        .iter()
        .all(|x| w.contains_sparse(&h.apply_antipode_inv_sparse(x)));
    let two_sided_ideal = basis.iter().all(|x| {
        (0..n).all(|i| {
            w.contains_sparse(&h.left_mul_basis(i, x))
                && w.contains_sparse(&h.right_mul_basis(x, i))
        })
    });
    let coideal_ideal = basis
        .iter()
        .all(|x| h.counit_of_sparse(x).is_zero() && coideal_defect(h, w, x).is_zero());
    ClassifiedSubspace {
        space: w.clone(),
        contains_unit,
        subalgebra: contains_unit && closed,
        left_coideal,
        right_coideal,
        subcoalgebra: left_coideal && right_coideal,
        antipode_stable,
        antipode_inverse_stable,
        coideal_ideal,
        two_sided_ideal,
    }
}
