//! Axiom checking and construction of validated algebras.

use std::fmt;

use crate::exactalg::serial::FieldSpec;
use crate::exactalg::{Matrix, Scalar, SparseVec};

use super::algebra::HopfAlgebra;

/// Unvalidated structure constants. `mult` and `comult` are indexed and
/// flattened row-major exactly as in [`HopfAlgebra`].
#[derive(Clone, Debug)]
pub struct RawHopf {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub mult: Vec<SparseVec>,
    pub unit: Vec<Scalar>,
    pub comult: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Shape,
    Associativity,
    Unitality,
    Coassociativity,
    Counitality,
    ComultiplicationMultiplicative,
    CounitMultiplicative,
    Antipode,
    AntipodeInvertible,
}

impl Axiom {
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Shape => "shape",
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counitality => "counitality",
            Axiom::ComultiplicationMultiplicative => "comultiplication is an algebra map",
            Axiom::CounitMultiplicative => "counit is an algebra map",
            Axiom::Antipode => "antipode",
            Axiom::AntipodeInvertible => "antipode invertible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// Basis indices exhibiting the failure (empty for unit-level checks).
    pub witness: Vec<usize>,
    pub witness_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn failed(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|x| {
                if x.witness_labels.is_empty() {
                    x.axiom.name().to_string()
                } else {
                    format!(
                        "{} (witness {})",
                        x.axiom.name(),
                        x.witness_labels.join(", ")
                    )
                }
            })
            .collect();
        write!(f, "axiom failures: {}", parts.join("; "))
    }
}

impl std::error::Error for AxiomReport {}

fn shape_error() -> AxiomReport {
    AxiomReport {
        failures: vec![AxiomFailure {
            axiom: Axiom::Shape,
            witness: vec![],
            witness_labels: vec![],
        }],
    }
}

/// `(T ⊗ id)` or `(id ⊗ T)` applied to a tensor of `H⊗H`, landing in `H^{⊗3}`
/// with `T = Δ`.
fn comult_left(h: &RawHopf, t: &SparseVec) -> SparseVec {
    let n = h.labels.len();
    let mut out = SparseVec::new();
    for (p, c) in t.iter() {
        let (i, j) = (p / n, p % n);
        for (q, d) in h.comult[i].iter() {
            out.add_term(q * n + j, &(c * d));
        }
    }
    out
}

fn comult_right(h: &RawHopf, t: &SparseVec) -> SparseVec {
    let n = h.labels.len();
    let mut out = SparseVec::new();
    for (p, c) in t.iter() {
        let (i, j) = (p / n, p % n);
        for (q, d) in h.comult[j].iter() {
            out.add_term(i * n * n + q, &(c * d));
        }
    }
    out
}

fn mul(h: &RawHopf, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let n = h.labels.len();
    let mut out = SparseVec::new();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.axpy(&(x * y), &h.mult[i * n + j]);
        }
    }
    out
}

fn mul2(h: &RawHopf, s: &SparseVec, t: &SparseVec) -> SparseVec {
    let n = h.labels.len();
    let mut out = SparseVec::new();
    for (p, x) in s.iter() {
        for (q, y) in t.iter() {
            let xy = x * y;
            let l = &h.mult[(p / n) * n + q / n];
            let r = &h.mult[(p % n) * n + q % n];
            for (a, u) in l.iter() {
                for (b, v) in r.iter() {
                    out.add_term(a * n + b, &(&xy * &(u * v)));
                }
            }
        }
    }
    out
}

fn counit(h: &RawHopf, x: &SparseVec) -> Scalar {
    let mut acc = Scalar::ZERO;
    for (i, c) in x.iter() {
        acc = &acc + &(c * &h.counit[i]);
    }
    acc
}

fn check_shape(raw: &RawHopf) -> bool {
    let n = raw.labels.len();
    let in_range = |v: &SparseVec, m: usize| v.iter().all(|(i, _)| i < m);
    n > 0
        && raw.mult.len() == n * n
        && raw.mult.iter().all(|v| in_range(v, n))
        && raw.unit.len() == n
        && raw.comult.len() == n
        && raw.comult.iter().all(|v| in_range(v, n * n))
        && raw.counit.len() == n
        && raw.antipode.rows() == n
        && raw.antipode.cols() == n
}

/// Checks every Hopf axiom as a finite identity on basis elements and builds
/// the algebra, or reports each failing axiom with its first witness.
pub fn build_validate(raw: RawHopf) -> Result<HopfAlgebra, AxiomReport> {
    if !check_shape(&raw) {
        return Err(shape_error());
    }
    let n = raw.labels.len();
    let e = |i: usize| SparseVec::single(i, Scalar::ONE);
    let unit = SparseVec::from_dense(&raw.unit);
    let mut failures = Vec::new();
    let mut fail = |axiom: Axiom, witness: Vec<usize>| {
        let witness_labels = witness.iter().map(|&i| raw.labels[i].clone()).collect();
        failures.push(AxiomFailure {
            axiom,
            witness,
            witness_labels,
        });
    };

    // associativity
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = &raw.mult[i * n + j];
            for k in 0..n {
                let lhs = mul(&raw, ij, &e(k));
                let rhs = mul(&raw, &e(i), &raw.mult[j * n + k]);
                if lhs != rhs {
                    fail(Axiom::Associativity, vec![i, j, k]);
                    break 'assoc;
                }
            }
        }
    }
    // unitality
    if let Some(i) =
        (0..n).find(|&i| mul(&raw, &unit, &e(i)) != e(i) || mul(&raw, &e(i), &unit) != e(i))
    {
        fail(Axiom::Unitality, vec![i]);
    }
    // coassociativity
    if let Some(k) =
        (0..n).find(|&k| comult_left(&raw, &raw.comult[k]) != comult_right(&raw, &raw.comult[k]))
    {
        fail(Axiom::Coassociativity, vec![k]);
    }
    // counitality
    let counital = |k: usize| {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (p, c) in raw.comult[k].iter() {
            left.add_term(p % n, &(c * &raw.counit[p / n]));
            right.add_term(p / n, &(c * &raw.counit[p % n]));
        }
        left == e(k) && right == e(k)
    };
    if let Some(k) = (0..n).find(|&k| !counital(k)) {
        fail(Axiom::Counitality, vec![k]);
    }
    // Δ multiplicative
    let unit2: SparseVec = {
        let mut t = SparseVec::new();
        for (i, a) in unit.iter() {
            for (j, b) in unit.iter() {
                t.add_term(i * n + j, &(a * b));
            }
        }
        t
    };
    let delta = |x: &SparseVec| {
        let mut out = SparseVec::new();
        for (k, c) in x.iter() {
            out.axpy(c, &raw.comult[k]);
        }
        out
    };
    if delta(&unit) != unit2 {
        fail(Axiom::ComultiplicationMultiplicative, vec![]);
    } else {
        'dm: for i in 0..n {
            for j in 0..n {
                if delta(&raw.mult[i * n + j]) != mul2(&raw, &raw.comult[i], &raw.comult[j]) {
                    fail(Axiom::ComultiplicationMultiplicative, vec![i, j]);
                    break 'dm;
                }
            }
        }
    }
    // ε multiplicative
    if !counit(&raw, &unit).is_one() {
        fail(Axiom::CounitMultiplicative, vec![]);
    } else {
        'em: for i in 0..n {
            for j in 0..n {
                if counit(&raw, &raw.mult[i * n + j]) != &raw.counit[i] * &raw.counit[j] {
                    fail(Axiom::CounitMultiplicative, vec![i, j]);
                    break 'em;
                }
            }
        }
    }
    // antipode
    let s_col = |i: usize| SparseVec::from_dense(&raw.antipode.column(i));
    let antipode_ok = |k: usize| {
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (p, c) in raw.comult[k].iter() {
            left.axpy(c, &mul(&raw, &s_col(p / n), &e(p % n)));
            right.axpy(c, &mul(&raw, &e(p / n), &s_col(p % n)));
        }
        let expected = unit.scaled(&raw.counit[k]);
        left == expected && right == expected
    };
    if let Some(k) = (0..n).find(|&k| !antipode_ok(k)) {
        fail(Axiom::Antipode, vec![k]);
    }
    let antipode_inv = raw.antipode.inverse();
    if antipode_inv.is_none() {
        fail(Axiom::AntipodeInvertible, vec![]);
    }
    if !failures.is_empty() {
        return Err(AxiomReport { failures });
    }

    Ok(assemble(raw, antipode_inv.unwrap()))
}

impl HopfAlgebra {
    /// The unvalidated tables, e.g. for perturbation or re-serialization.
    pub fn to_raw(&self) -> RawHopf {
        RawHopf {
            field: self.field,
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }
}

/// Builds an algebra from tables already known to satisfy the axioms (they
/// were derived from a validated algebra by a structure-preserving step).
pub(crate) fn assemble(raw: RawHopf, antipode_inv: Matrix) -> HopfAlgebra {
    let n = raw.labels.len();
    debug_assert!(check_shape(&raw));
    let commutative = (0..n).all(|i| (0..i).all(|j| raw.mult[i * n + j] == raw.mult[j * n + i]));
    let cocommutative = (0..n).all(|k| {
        let flipped: SparseVec = raw.comult[k]
            .iter()
            .map(|(p, c)| ((p % n) * n + p / n, c.clone()))
            .collect();
        flipped == raw.comult[k]
    });
    HopfAlgebra {
        field: raw.field,
        labels: raw.labels,
        mult: raw.mult,
        unit: raw.unit,
        comult: raw.comult,
        counit: raw.counit,
        antipode: raw.antipode,
        antipode_inv,
        commutative,
        cocommutative,
    }
}
