//! Row-major flattening of tensor-power index spaces.
//!
//! The multi-index `(i_1, ..., i_r)` of a space with factor dimensions
//! `(n_1, ..., n_r)` maps to `((i_1 n_2 + i_2) n_3 + ...) n_r + i_r`.
//! Every Δ-as-matrix encoding in the crate uses this convention.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    factor_dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(factor_dims: Vec<usize>) -> Self {
        TensorIndex { factor_dims }
    }

    /// `n^{⊗r}`.
    pub fn power(n: usize, r: usize) -> Self {
        TensorIndex {
            factor_dims: vec![n; r],
        }
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.factor_dims.len(), "tensor rank mismatch");
        let mut flat = 0;
        for (&i, &n) in idx.iter().zip(&self.factor_dims) {
            debug_assert!(i < n);
            flat = flat * n + i;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.factor_dims.len()];
        for (slot, &n) in idx.iter_mut().zip(&self.factor_dims).rev() {
            *slot = flat % n;
            flat /= n;
        }
        idx
    }
}

/// `(i, j) ↦ i·m + j` for an `n × m` space.
#[inline]
pub fn pair(i: usize, j: usize, m: usize) -> usize {
    i * m + j
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn row_major_pairs() {
        let t = TensorIndex::new(vec![2, 3]);
        assert_eq!(t.flatten(&[1, 2]), 5);
        assert_eq!(t.flatten(&[1, 0]), pair(1, 0, 3));
    }

    proptest! {
        #[test]
        fn flatten_is_bijective(dims in prop::collection::vec(1usize..5, 1..4)) {
            let t = TensorIndex::new(dims);
            let mut seen = vec![false; t.dim()];
            for (f, hit) in seen.iter_mut().enumerate() {
                let idx = t.unflatten(f);
                prop_assert_eq!(t.flatten(&idx), f);
                prop_assert!(!*hit);
                *hit = true;
            }
        }
    }
}
