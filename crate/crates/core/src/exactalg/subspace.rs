//! Subspaces of `k^n` in canonical reduced row echelon form.
//!
//! Every subspace-valued object of the crate (ideals, coideals, subalgebras,
//! kernels) is a [`Subspace`]. Because the basis is the unique RREF, two
//! subspaces are equal exactly when their fields are identical.

use std::cmp::Ordering;
use std::fmt;

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector::{self, SparseVec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersect,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("ambient dimension mismatch: {0} vs {1}")]
pub struct AmbientMismatch(pub usize, pub usize);

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(0, n),
            pivots: vec![],
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors<I>(n: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut b = EchelonBuilder::new(n);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    pub fn from_sparse<'a, I>(n: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        Self::from_vectors(n, vectors.into_iter().map(|v| v.to_dense(n)))
    }

    /// Span of standard basis vectors.
    pub fn coordinate(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::from_vectors(n, indices.into_iter().map(|i| vector::unit_vector(n, i)))
    }

    /// Wraps a matrix already in RREF (checked).
    pub fn from_rref(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rref(), (basis.clone(), pivots.clone()));
        Subspace {
            ambient_dim: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> &[Scalar] {
        self.basis.row(k)
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.dim()).map(move |k| self.basis.row(k))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates complementary to the pivots; they index the canonical
    /// basis of the quotient `k^n / self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// `v - Σ v[p_k] b_k`: zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(
            v.len(),
            self.ambient_dim,
            "vector length does not match ambient dimension"
        );
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if !r[p].is_zero() {
                let c = -&r[p];
                vector::axpy(&mut r, &c, self.basis.row(k));
            }
        }
        r
    }

    pub fn reduce_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = r.get(p);
            if !c.is_zero() {
                let neg = -&c;
                for (j, b) in self.basis.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        r.add_term(j, &(&neg * b));
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.reduce_sparse(v).is_zero()
    }

    /// Membership test returning coordinates in the RREF basis on success.
    /// Coordinates of a member are simply its entries at the pivot columns.
    pub fn membership(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Image of `v` in the quotient `k^n / self`, in the basis indexed by [`Self::non_pivots`].
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(v);
        self.non_pivots()
            .into_iter()
            .map(|i| r[i].clone())
            .collect()
    }

    /// The quotient map `k^n → k^n / self` as a matrix.
    pub fn quotient_matrix(&self) -> Matrix {
        let n = self.ambient_dim;
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.quotient_coords(&vector::unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n - self.dim(), &cols)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch"
        );
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() || other.is_full() {
            return other.clone();
        }
        let mut b = EchelonBuilder::from_subspace(self);
        for v in other.basis_vectors() {
            b.insert(v.to_vec());
        }
        b.finish()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch"
        );
        if self.is_zero() || other.is_full() {
            return self.clone();
        }
        if other.is_zero() || self.is_full() {
            return other.clone();
        }
        let p = self.dim();
        let vecs: Vec<SparseVec> = self
            .basis_vectors()
            .chain(other.basis_vectors())
            .map(SparseVec::from_dense)
            .collect();
        let rel = vector::linear_relations(&vecs);
        let n = self.ambient_dim;
        Subspace::from_vectors(
            n,
            rel.into_iter().map(|c| {
                let mut v = vector::zeros(n);
                for (k, ck) in c.iter().take(p).enumerate() {
                    vector::axpy(&mut v, ck, self.basis.row(k));
                }
                v
            }),
        )
    }

    pub fn combine(
        &self,
        other: &Subspace,
        mode: CombineMode,
    ) -> Result<Subspace, AmbientMismatch> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(match mode {
            CombineMode::Sum => self.sum(other),
            CombineMode::Intersect => self.intersect(other),
        })
    }

    /// Image under a linear map given as a matrix with `ambient_dim` columns.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::from_vectors(m.rows(), self.basis_vectors().map(|b| m.mul_vec(b)))
    }

    /// Image under a linear map given by its action on vectors.
    pub fn map_with<F>(&self, target_dim: usize, f: F) -> Subspace
    where
        F: Fn(&[Scalar]) -> Vec<Scalar>,
    {
        Subspace::from_vectors(target_dim, self.basis_vectors().map(f))
    }

    /// `{x ∈ self : f(x) = 0}` for a linear `f` evaluated on basis vectors.
    pub fn kernel_of<F>(&self, f: F) -> Subspace
    where
        F: Fn(&[Scalar]) -> SparseVec,
    {
        let images: Vec<SparseVec> = self.basis_vectors().map(f).collect();
        self.combine_relations(&images)
    }

    /// Vectors `Σ c_k b_k` for all relations `Σ c_k images_k = 0`.
    pub fn combine_relations(&self, images: &[SparseVec]) -> Subspace {
        let n = self.ambient_dim;
        let rel = vector::linear_relations(images);
        Subspace::from_vectors(
            n,
            rel.into_iter().map(|c| {
                let mut v = vector::zeros(n);
                for (k, ck) in c.iter().enumerate() {
                    vector::axpy(&mut v, ck, self.basis.row(k));
                }
                v
            }),
        )
    }

    /// Coordinates of the subspace relative to a containing subspace's basis
    /// (the entries at the container's pivot columns).
    pub fn relative_to(&self, container: &Subspace) -> Subspace {
        let piv = container.pivots();
        Subspace::from_vectors(
            piv.len(),
            self.basis_vectors().map(|b| {
                debug_assert!(container.contains(b));
                piv.iter().map(|&p| b[p].clone()).collect()
            }),
        )
    }

    /// Inverse of [`Self::relative_to`]: embeds local coordinates back into the ambient space.
    pub fn embed_into(&self, container: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, container.dim());
        let n = container.ambient_dim();
        Subspace::from_vectors(
            n,
            self.basis_vectors().map(|c| {
                let mut v = vector::zeros(n);
                for (k, ck) in c.iter().enumerate() {
                    vector::axpy(&mut v, ck, container.basis_vector(k));
                }
                v
            }),
        )
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on (ambient, pivots, RREF entries).
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| {
                for k in 0..self.dim() {
                    let o = self.basis.row(k).cmp(other.basis.row(k));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in k^{}", self.dim(), self.ambient_dim)?;
        for b in self.basis_vectors() {
            let r: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "; [{}]", r.join(" "))?;
        }
        write!(f, ")")
    }
}

/// Incrementally maintained RREF.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    n: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBuilder {
    pub fn new(n: usize) -> Self {
        EchelonBuilder {
            n,
            rows: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBuilder {
            n: s.ambient_dim,
            rows: s
                .pivots
                .iter()
                .enumerate()
                .map(|(k, &p)| (p, s.basis.row(k).to_vec()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn reduce(&self, v: &mut [Scalar]) {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                vector::axpy(v, &c, row);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        vector::is_zero(&r)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(
            v.len(),
            self.n,
            "vector length does not match ambient dimension"
        );
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        if !inv.is_one() {
            v = vector::scale(&v, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                vector::axpy(row, &c, &v);
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn finish(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        let pivots = self.rows.iter().map(|(p, _)| *p).collect();
        let basis = Matrix::from_rows(self.n, self.rows.into_iter().map(|(_, r)| r).collect());
        Subspace {
            ambient_dim: self.n,
            basis,
            pivots,
        }
    }
}
