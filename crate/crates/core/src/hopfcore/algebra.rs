//! The structure-constant data model.

use std::fmt;
use std::sync::Arc;

use crate::exactalg::serial::FieldSpec;
use crate::exactalg::{vector, Matrix, Scalar, SparseVec};

/// Shared handle; algebras are immutable once validated.
pub type Hopf = Arc<HopfAlgebra>;

/// A validated finite-dimensional Hopf algebra.
///
/// Products `e_i e_j` and coproducts `Δ e_k` are stored sparsely; tensor
/// indices are flattened row-major, `(i, j) ↦ i·n + j`.
#[derive(Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub(crate) field: FieldSpec,
    pub(crate) labels: Vec<String>,
    pub(crate) mult: Vec<SparseVec>,
    pub(crate) unit: Vec<Scalar>,
    pub(crate) comult: Vec<SparseVec>,
    pub(crate) counit: Vec<Scalar>,
    pub(crate) antipode: Matrix,
    pub(crate) antipode_inv: Matrix,
    pub(crate) commutative: bool,
    pub(crate) cocommutative: bool,
}

impl HopfAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    /// `e_i e_j`.
    #[inline]
    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn mult_table(&self) -> &[SparseVec] {
        &self.mult
    }

    /// `Δ e_k` over the flattened `H⊗H`.
    #[inline]
    pub fn comult_basis(&self, k: usize) -> &SparseVec {
        &self.comult[k]
    }

    pub fn comult_table(&self) -> &[SparseVec] {
        &self.comult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn unit_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.unit)
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit_vector(self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mul_sparse(&SparseVec::from_dense(a), &SparseVec::from_dense(b))
            .to_dense(self.dim())
    }

    pub fn mul_sparse(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.axpy(&(x * y), self.mult_basis(i, j));
            }
        }
        out
    }

    /// `e_i · b`.
    pub fn left_mul_basis(&self, i: usize, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, y) in b.iter() {
            out.axpy(y, self.mult_basis(i, j));
        }
        out
    }

    /// `a · e_j`.
    pub fn right_mul_basis(&self, a: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            out.axpy(x, self.mult_basis(i, j));
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, x)
    }

    pub fn counit_of_sparse(&self, x: &SparseVec) -> Scalar {
        let mut acc = Scalar::ZERO;
        for (i, c) in x.iter() {
            if !self.counit[i].is_zero() {
                acc = &acc + &(c * &self.counit[i]);
            }
        }
        acc
    }

    pub fn comult_of(&self, x: &[Scalar]) -> SparseVec {
        self.comult_sparse(&SparseVec::from_dense(x))
    }

    pub fn comult_sparse(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, c) in x.iter() {
            out.axpy(c, &self.comult[k]);
        }
        out
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }

    pub fn apply_antipode_sparse(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, c) in x.iter() {
            for i in 0..n {
                let s = &self.antipode[(i, k)];
                if !s.is_zero() {
                    out.add_term(i, &(c * s));
                }
            }
        }
        out
    }

    pub fn apply_antipode_inv_sparse(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (k, c) in x.iter() {
            for i in 0..n {
                let s = &self.antipode_inv[(i, k)];
                if !s.is_zero() {
                    out.add_term(i, &(c * s));
                }
            }
        }
        out
    }

    /// Product in `H⊗H`: `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn mul2(&self, s: &SparseVec, t: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (p, x) in s.iter() {
            let (i, j) = (p / n, p % n);
            for (q, y) in t.iter() {
                let (k, l) = (q / n, q % n);
                let xy = x * y;
                for (a, u) in self.mult_basis(i, k).iter() {
                    for (b, v) in self.mult_basis(j, l).iter() {
                        out.add_term(a * n + b, &(&xy * &(u * v)));
                    }
                }
            }
        }
        out
    }

    /// `Δ^op` of `e_k`.
    pub fn comult_op_basis(&self, k: usize) -> SparseVec {
        let n = self.dim();
        self.comult[k]
            .iter()
            .map(|(p, c)| ((p % n) * n + p / n, c.clone()))
            .collect()
    }

    /// `Σ S(x_1) x_2` style contraction `m ∘ (f ⊗ g) ∘ Δ` applied to `x`,
    /// with `f`, `g` given as matrices.
    pub fn convolve(&self, f: &Matrix, g: &Matrix, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (p, c) in self.comult_sparse(x).iter() {
            let a = SparseVec::from_dense(&f.column(p / n));
            let b = SparseVec::from_dense(&g.column(p % n));
            out.axpy(c, &self.mul_sparse(&a, &b));
        }
        out
    }

    /// Left multiplication `x ↦ e_i x` as a matrix.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let a = SparseVec::from_dense(a);
        let cols: Vec<SparseVec> = (0..n).map(|j| self.right_mul_basis(&a, j)).collect();
        Matrix::from_sparse_columns(n, &cols)
    }

    /// Same algebra with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> HopfAlgebra {
        assert_eq!(labels.len(), self.dim());
        HopfAlgebra {
            labels,
            ..self.clone()
        }
    }

    /// Equality of all structure constants, ignoring labels.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.field == other.field
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebra(dim {}, field {:?}, labels {:?}, commutative {}, cocommutative {})",
            self.dim(),
            self.field,
            self.labels,
            self.commutative,
            self.cocommutative
        )
    }
}

/// An element together with its parent algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    parent: Hopf,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(parent: Hopf, coords: Vec<Scalar>) -> Self {
        assert_eq!(
            coords.len(),
            parent.dim(),
            "element length does not match algebra dimension"
        );
        Element { parent, coords }
    }

    pub fn basis(parent: Hopf, i: usize) -> Self {
        let coords = parent.basis_vector(i);
        Element { parent, coords }
    }

    pub fn one(parent: Hopf) -> Self {
        let coords = parent.unit().to_vec();
        Element { parent, coords }
    }

    pub fn parent(&self) -> &Hopf {
        &self.parent
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn mul(&self, other: &Element) -> Element {
        assert!(Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent);
        Element {
            parent: self.parent.clone(),
            coords: self.parent.mul(&self.coords, &other.coords),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            parent: self.parent.clone(),
            coords: vector::add(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            parent: self.parent.clone(),
            coords: vector::scale(&self.coords, c),
        }
    }

    pub fn counit(&self) -> Scalar {
        self.parent.counit_of(&self.coords)
    }

    pub fn antipode(&self) -> Element {
        Element {
            parent: self.parent.clone(),
            coords: self.parent.apply_antipode(&self.coords),
        }
    }

    pub fn comult(&self) -> SparseVec {
        self.parent.comult_of(&self.coords)
    }

    /// `Δx = x⊗x` and `ε(x) = 1`.
    pub fn is_grouplike(&self) -> bool {
        let n = self.parent.dim();
        let x = SparseVec::from_dense(&self.coords);
        let mut xx = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in x.iter() {
                xx.add_term(i * n + j, &(a * b));
            }
        }
        self.counit().is_one() && self.comult() == xx
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            format_combination(self.parent.labels(), &self.coords)
        )
    }
}

/// Human-readable linear combination of labelled basis vectors.
pub fn format_combination(labels: &[String], coords: &[Scalar]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            labels[i].clone()
        } else if *c == Scalar::from_int(-1) {
            format!("-{}", labels[i])
        } else {
            format!("{}*{}", c, labels[i])
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+").replace("+-", "-")
    }
}
