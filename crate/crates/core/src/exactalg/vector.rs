//! Dense and sparse coordinate vectors.

use std::collections::BTreeMap;

use super::scalar::Scalar;

pub fn zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::ZERO; n]
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(n);
    v[i] = Scalar::ONE;
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = &*yi + &(a * xi);
        }
    }
}

pub fn scale(v: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| a * x).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::ZERO;
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// A sparse vector, entries kept ordered by index and never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SparseVec { entries }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        let mut s = Self::new();
        s.add_term(i, &c);
        s
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut v = zeros(n);
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(e) => {
                let s = &*e + c;
                if s.is_zero() {
                    self.entries.remove(&i);
                } else {
                    *e = s;
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += a * x`
    pub fn axpy(&mut self, a: &Scalar, x: &SparseVec) {
        if a.is_zero() {
            return;
        }
        for (i, c) in &x.entries {
            self.add_term(*i, &(a * c));
        }
    }

    pub fn scaled(&self, a: &Scalar) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, a * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, c)| (i + offset, c.clone()))
                .collect(),
        }
    }

    /// Appends `other` with its indices shifted by `offset`; the ranges must not overlap.
    pub fn extend_shifted(&mut self, other: &SparseVec, offset: usize) {
        for (i, c) in &other.entries {
            self.entries.insert(i + offset, c.clone());
        }
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        let mut s = SparseVec::new();
        for (i, c) in iter {
            s.add_term(i, &c);
        }
        s
    }
}

/// Relations `c` with `Σ c_k v_k = 0` among the given vectors, as a basis of
/// the relation space (each relation has a 1 at a distinct free position).
///
/// Column-style elimination: cheap when there are few vectors in a large space.
pub fn linear_relations(vectors: &[SparseVec]) -> Vec<Vec<Scalar>> {
    let d = vectors.len();
    // reduced pivot vectors with their combination in terms of inputs
    let mut pivots: Vec<(usize, SparseVec, SparseVec)> = Vec::new();
    let mut relations = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        let mut r = v.clone();
        let mut combo = SparseVec::single(k, Scalar::ONE);
        for (p, w, wc) in &pivots {
            let c = r.get(*p);
            if !c.is_zero() {
                let neg = -&c;
                r.axpy(&neg, w);
                combo.axpy(&neg, wc);
            }
        }
        match r.leading() {
            None => relations.push(combo.to_dense(d)),
            Some((p, lead)) => {
                let inv = lead.inv().unwrap();
                let w = r.scaled(&inv);
                let wc = combo.scaled(&inv);
                pivots.push((p, w, wc));
            }
        }
    }
    relations
}
