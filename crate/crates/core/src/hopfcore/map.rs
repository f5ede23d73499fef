//! Linear maps between Hopf algebras with verified structural flags.

use crate::exactalg::{Matrix, Scalar, SparseVec, Subspace};

use super::algebra::Hopf;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MapFlags {
    pub is_algebra_map: bool,
    pub is_unital: bool,
    pub is_coalgebra_map: bool,
    pub is_counital: bool,
    pub is_bijective: bool,
}

impl MapFlags {
    pub fn is_hopf_map(&self) -> bool {
        self.is_algebra_map && self.is_unital && self.is_coalgebra_map && self.is_counital
    }

    pub fn is_hopf_iso(&self) -> bool {
        self.is_hopf_map() && self.is_bijective
    }
}

/// A linear map `domain → codomain` (matrix of size codomain × domain).
/// Flags are computed from the matrix on construction, never supplied.
#[derive(Clone, Debug)]
pub struct StructuredMap {
    domain: Hopf,
    codomain: Hopf,
    matrix: Matrix,
    flags: MapFlags,
}

impl StructuredMap {
    pub fn new(domain: Hopf, codomain: Hopf, matrix: Matrix) -> Self {
        assert_eq!(
            (matrix.rows(), matrix.cols()),
            (codomain.dim(), domain.dim()),
            "map matrix has wrong shape"
        );
        let flags = compute_flags(&domain, &codomain, &matrix);
        StructuredMap {
            domain,
            codomain,
            matrix,
            flags,
        }
    }

    pub fn identity(h: Hopf) -> Self {
        let m = Matrix::identity(h.dim());
        Self::new(h.clone(), h, m)
    }

    pub fn domain(&self) -> &Hopf {
        &self.domain
    }

    pub fn codomain(&self) -> &Hopf {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn flags(&self) -> MapFlags {
        self.flags
    }

    /// Recomputes every flag from scratch.
    pub fn recheck(&self) -> MapFlags {
        compute_flags(&self.domain, &self.codomain, &self.matrix)
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &StructuredMap) -> StructuredMap {
        assert!(
            first.codomain.same_structure(&self.domain),
            "composition of incompatible maps"
        );
        StructuredMap::new(
            first.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&first.matrix),
        )
    }

    pub fn inverse(&self) -> Option<StructuredMap> {
        let inv = self.matrix.inverse()?;
        Some(StructuredMap::new(
            self.codomain.clone(),
            self.domain.clone(),
            inv,
        ))
    }
}

fn compute_flags(dom: &Hopf, cod: &Hopf, f: &Matrix) -> MapFlags {
    let (n, m) = (dom.dim(), cod.dim());
    let cols: Vec<SparseVec> = (0..n)
        .map(|j| SparseVec::from_dense(&f.column(j)))
        .collect();
    let apply = |v: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &cols[i]);
        }
        out
    };
    let is_unital = apply(&dom.unit_sparse()) == cod.unit_sparse();
    let is_algebra_map = (0..n)
        .all(|i| (0..n).all(|j| apply(dom.mult_basis(i, j)) == cod.mul_sparse(&cols[i], &cols[j])));
    let is_counital = (0..n).all(|j| cod.counit_of_sparse(&cols[j]) == dom.counit()[j]);
    let is_coalgebra_map = (0..n).all(|k| {
        let mut ff = SparseVec::new();
        for (p, c) in dom.comult_basis(k).iter() {
            for (a, x) in cols[p / n].iter() {
                for (b, y) in cols[p % n].iter() {
                    ff.add_term(a * m + b, &(&(c * x) * y));
                }
            }
        }
        ff == cod.comult_sparse(&cols[k])
    });
    let is_bijective = n == m && f.rank() == n;
    MapFlags {
        is_algebra_map,
        is_unital,
        is_coalgebra_map,
        is_counital,
        is_bijective,
    }
}
