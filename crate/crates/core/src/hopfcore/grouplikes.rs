//! Grouplike elements of `H`, found as the characters of `H*`.
//!
//! Characters of `B = H*` factor through the largest commutative quotient
//! `C = B/[B,B]`. They are the one-dimensional joint eigenspaces of the
//! transposed left multiplications on `C*`; eigenvalues are searched among
//! the rationals and the roots of unity of the base field. When some
//! characteristic polynomial does not split over those candidates the result
//! is flagged incomplete.

use crate::exactalg::poly::{charpoly, find_roots};
use crate::exactalg::{EchelonBuilder, Matrix, Scalar, SparseVec, Subspace};

use super::algebra::{Element, Hopf, HopfAlgebra};
use super::constructions::{dual, project};

#[derive(Clone, Debug)]
pub struct Grouplikes {
    /// Identity first, the rest in coordinate order.
    pub elements: Vec<Element>,
    /// Whether every eigenvalue search was exhaustive.
    pub complete: bool,
}

impl Grouplikes {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `table[a][b] = c` with `g_a g_b = g_c`; `None` if not closed.
    pub fn multiplication_table(&self) -> Option<Vec<Vec<usize>>> {
        let mut table = Vec::with_capacity(self.len());
        for a in &self.elements {
            let mut row = Vec::with_capacity(self.len());
            for b in &self.elements {
                let p = a.mul(b);
                row.push(
                    self.elements
                        .iter()
                        .position(|g| g.coords() == p.coords())?,
                );
            }
            table.push(row);
        }
        Some(table)
    }
}

/// Two-sided ideal generated by the span of `gens`.
pub(crate) fn two_sided_ideal(h: &HopfAlgebra, gens: Vec<SparseVec>) -> Subspace {
    let n = h.dim();
    let mut b = EchelonBuilder::new(n);
    let mut queue = Vec::new();
    for g in gens {
        if b.insert(g.to_dense(n)) {
            queue.push(g);
        }
    }
    while let Some(v) = queue.pop() {
        if b.is_full() {
            break;
        }
        for i in 0..n {
            for w in [h.left_mul_basis(i, &v), h.right_mul_basis(&v, i)] {
                if b.insert(w.to_dense(n)) {
                    queue.push(w);
                }
            }
        }
    }
    b.finish()
}

pub fn grouplikes(h: &Hopf) -> Grouplikes {
    let n = h.dim();
    let b_alg = dual(h);
    let commutators: Vec<SparseVec> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut c = b_alg.mult_basis(i, j).clone();
            c.axpy(&Scalar::from_int(-1), b_alg.mult_basis(j, i));
            c
        })
        .filter(|c| !c.is_zero())
        .collect();
    let ideal = two_sided_ideal(&b_alg, commutators);
    let keep = ideal.non_pivots();
    let d = keep.len();
    let proj: Vec<SparseVec> = (0..n)
        .map(|i| project(&ideal, &keep, &SparseVec::single(i, Scalar::ONE)))
        .collect();
    let apply = |v: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.axpy(c, &proj[i]);
        }
        out
    };
    // structure constants of C: c_s c_t
    let cmul: Vec<SparseVec> = (0..d * d)
        .map(|p| apply(b_alg.mult_basis(keep[p / d], keep[p % d])))
        .collect();
    let c_unit = apply(&b_alg.unit_sparse());
    // transposed left multiplication L_s^T on C*: (L_s^T φ)_t = Σ_u (c_s c_t)_u φ_u
    let lt = |s: usize| {
        let mut m = Matrix::zeros(d, d);
        for t in 0..d {
            for (u, c) in cmul[s * d + t].iter() {
                m[(t, u)] = c.clone();
            }
        }
        m
    };
    let conductor = h.field().conductor();
    let mut complete = true;
    let mut branches: Vec<Subspace> = vec![Subspace::full(d)];
    for s in 0..d {
        if branches.iter().all(|v| v.dim() <= 1) {
            break;
        }
        let m = lt(s);
        let mut next = Vec::new();
        for v in branches {
            if v.dim() <= 1 {
                next.push(v);
                continue;
            }
            // matrix of L_s^T restricted to the invariant subspace v
            let k = v.dim();
            let mut r = Matrix::zeros(k, k);
            for (col, x) in v.basis_vectors().enumerate() {
                let y = m.mul_vec(x);
                for (row, &p) in v.pivots().iter().enumerate() {
                    r[(row, col)] = y[p].clone();
                }
            }
            let roots = find_roots(&charpoly(&r), conductor);
            complete &= roots.split;
            for (lambda, _) in roots.roots {
                let mut shifted = r.clone();
                for i in 0..k {
                    shifted[(i, i)] = &shifted[(i, i)] - &lambda;
                }
                let eig = shifted.kernel().embed_into(&v);
                if !eig.is_zero() {
                    next.push(eig);
                }
            }
        }
        branches = next;
    }
    let mut found: Vec<Vec<Scalar>> = Vec::new();
    for v in branches {
        if v.dim() != 1 {
            continue;
        }
        let phi = v.basis_vector(0);
        let at_one = c_unit
            .iter()
            .fold(Scalar::ZERO, |acc, (u, c)| &acc + &(c * &phi[u]));
        let Some(inv) = at_one.inv() else { continue };
        let chi: Vec<Scalar> = phi.iter().map(|x| x * &inv).collect();
        let eval = |x: &SparseVec| {
            x.iter()
                .fold(Scalar::ZERO, |acc, (u, c)| &acc + &(c * &chi[u]))
        };
        let multiplicative =
            (0..d).all(|s| (0..d).all(|t| eval(&cmul[s * d + t]) == &chi[s] * &chi[t]));
        if !multiplicative {
            continue;
        }
        let g: Vec<Scalar> = proj.iter().map(eval).collect();
        let e = Element::new(h.clone(), g);
        if e.is_grouplike() {
            found.push(e.into_coords());
        }
    }
    found.sort();
    found.dedup();
    if let Some(pos) = found.iter().position(|g| g.as_slice() == h.unit()) {
        let one = found.remove(pos);
        found.insert(0, one);
    }
    Grouplikes {
        elements: found
            .into_iter()
            .map(|g| Element::new(h.clone(), g))
            .collect(),
        complete,
    }
}
