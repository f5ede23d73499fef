//! The corpus: group algebras, function algebras, Sweedler's H4,
//! the Kac–Paljutkin algebra H8 and a few tensor products.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::serial::FieldSpec;
use crate::exactalg::{Matrix, Scalar, SparseVec};
use crate::hopfcore::{build_validate, tensor_product, Hopf, HopfAlgebra, RawHopf};

use super::groups::{FiniteGroup, Subset};

pub const GROUP_NAMES: [&str; 10] = ["C2", "C3", "C4", "C6", "V4", "S3", "D4", "Q8", "A4", "S4"];

fn q8() -> FiniteGroup {
    // index 2u + s encodes sign (-1)^s times unit u ∈ {1, i, j, k}
    let units = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, s) = units[a / 2][b / 2];
                    2 * u + ((a % 2 + b % 2 + s) % 2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table("Q8", labels, table).expect("Q8 table")
}

/// A corpus group by name.
pub fn group(name: &str) -> Result<FiniteGroup> {
    let p = FiniteGroup::perm;
    let perms = |deg: usize, gens: &[&str]| {
        FiniteGroup::from_permutations(
            name,
            deg,
            &gens.iter().map(|c| p(deg, c)).collect::<Vec<_>>(),
        )
    };
    match name {
        "C1" => FiniteGroup::from_table("C1", vec!["e".into()], vec![vec![0]]),
        "C2" => perms(2, &["(12)"]),
        "C3" => perms(3, &["(123)"]),
        "C4" => perms(4, &["(1234)"]),
        "C6" => perms(6, &["(123456)"]),
        "V4" => perms(4, &["(12)(34)", "(13)(24)"]),
        "S3" => perms(3, &["(12)", "(123)"]),
        "D4" => perms(4, &["(1234)", "(24)"]),
        "Q8" => Ok(q8()),
        "A4" => perms(4, &["(123)", "(12)(34)"]),
        "S4" => perms(4, &["(12)", "(1234)"]),
        _ => Err(Error::Schema(format!("unknown corpus group {name}"))),
    }
}

/// Named subgroups as generator labels; every group also has `1` and `G`.
fn named_generators(name: &str) -> Vec<(&'static str, Vec<&'static str>)> {
    match name {
        "C4" => vec![("C2", vec!["(13)(24)"])],
        "C6" => vec![("C2", vec!["(14)(25)(36)"]), ("C3", vec!["(135)(246)"])],
        "V4" => vec![
            ("C2a", vec!["(12)(34)"]),
            ("C2b", vec!["(13)(24)"]),
            ("C2c", vec!["(14)(23)"]),
        ],
        "S3" => vec![
            ("A3", vec!["(123)"]),
            ("C2", vec!["(12)"]),
            ("C2b", vec!["(13)"]),
            ("C2c", vec!["(23)"]),
        ],
        "D4" => vec![
            ("C4", vec!["(1234)"]),
            ("R2", vec!["(13)(24)"]),
            ("S", vec!["(24)"]),
            ("K", vec!["(13)(24)", "(24)"]),
            ("K2", vec!["(13)(24)", "(12)(34)"]),
        ],
        "Q8" => vec![
            ("Z", vec!["-1"]),
            ("I", vec!["i"]),
            ("J", vec!["j"]),
            ("K", vec!["k"]),
        ],
        "A4" => vec![
            ("V4", vec!["(12)(34)", "(13)(24)"]),
            ("C3", vec!["(123)"]),
            ("C2", vec!["(12)(34)"]),
        ],
        "S4" => vec![
            ("A4", vec!["(123)", "(12)(34)"]),
            ("V4", vec!["(12)(34)", "(13)(24)"]),
            ("D4", vec!["(1234)", "(13)"]),
            ("C2a", vec!["(12)(34)"]),
            ("C2b", vec!["(13)(24)"]),
            ("C2c", vec!["(14)(23)"]),
            ("S3", vec!["(12)", "(123)"]),
            ("C3", vec!["(123)"]),
            ("C4", vec!["(1234)"]),
            ("T", vec!["(12)"]),
        ],
        _ => vec![],
    }
}

/// Named subgroups of a corpus group, including `1` and `G`.
pub fn named_subgroups(g: &FiniteGroup) -> Vec<(String, Subset)> {
    let mut out = vec![("1".to_string(), g.trivial())];
    for (n, gens) in named_generators(g.name()) {
        let s = g.subset_of(gens.iter().map(|l| {
            g.index_of(l)
                .unwrap_or_else(|| panic!("label {l} in {}", g.name()))
        }));
        out.push((n.to_string(), g.generate(s)));
    }
    out.push(("G".to_string(), g.full()));
    out
}

pub fn named_subgroup(g: &FiniteGroup, name: &str) -> Option<Subset> {
    named_subgroups(g)
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, s)| s)
}

pub fn group_algebra_raw(g: &FiniteGroup) -> RawHopf {
    let n = g.order();
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        antipode[(g.inv(a), a)] = Scalar::ONE;
    }
    RawHopf {
        field: FieldSpec::Q,
        labels: g.labels().to_vec(),
        mult: (0..n * n)
            .map(|p| SparseVec::single(g.mul(p / n, p % n), Scalar::ONE))
            .collect(),
        unit: crate::exactalg::vector::unit_vector(n, g.identity()),
        comult: (0..n)
            .map(|a| SparseVec::single(a * n + a, Scalar::ONE))
            .collect(),
        counit: vec![Scalar::ONE; n],
        antipode,
    }
}

pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    build_validate(group_algebra_raw(g)).expect("group algebra axioms")
}

/// Functions on `G` in the basis of point masses, labelled `g*`.
pub fn function_algebra_raw(g: &FiniteGroup) -> RawHopf {
    let n = g.order();
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        antipode[(g.inv(a), a)] = Scalar::ONE;
    }
    let mut comult = vec![SparseVec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comult[g.mul(a, b)].add_term(a * n + b, &Scalar::ONE);
        }
    }
    RawHopf {
        field: FieldSpec::Q,
        labels: g.labels().iter().map(|l| format!("{l}*")).collect(),
        mult: (0..n * n)
            .map(|p| {
                if p / n == p % n {
                    SparseVec::single(p / n, Scalar::ONE)
                } else {
                    SparseVec::new()
                }
            })
            .collect(),
        unit: vec![Scalar::ONE; n],
        comult,
        counit: crate::exactalg::vector::unit_vector(n, g.identity()),
        antipode: antipode.transpose(),
    }
}

pub fn function_algebra(g: &FiniteGroup) -> HopfAlgebra {
    build_validate(function_algebra_raw(g)).expect("function algebra axioms")
}

/// Tables for an algebra given on a monomial basis: products of basis
/// elements, and each basis element as a word in generators whose
/// coproduct, counit and antipode are prescribed.
struct Presentation {
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: usize,
    words: Vec<Vec<usize>>,
    gen_comult: Vec<SparseVec>,
    gen_counit: Vec<Scalar>,
    gen_antipode: Vec<SparseVec>,
}

impl Presentation {
    fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.labels.len();
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.axpy(&(x * y), &self.mult[i * n + j]);
            }
        }
        out
    }

    fn mul2(&self, s: &SparseVec, t: &SparseVec) -> SparseVec {
        let n = self.labels.len();
        let mut out = SparseVec::new();
        for (p, x) in s.iter() {
            for (q, y) in t.iter() {
                let l = &self.mult[(p / n) * n + q / n];
                let r = &self.mult[(p % n) * n + q % n];
                for (a, u) in l.iter() {
                    for (b, v) in r.iter() {
                        out.add_term(a * n + b, &(&(x * y) * &(u * v)));
                    }
                }
            }
        }
        out
    }

    fn compile(self) -> RawHopf {
        let n = self.labels.len();
        let one = SparseVec::single(self.unit, Scalar::ONE);
        let one2 = SparseVec::single(self.unit * n + self.unit, Scalar::ONE);
        let mut comult = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        let mut s_cols = Vec::with_capacity(n);
        for w in &self.words {
            let mut d = one2.clone();
            let mut e = Scalar::ONE;
            let mut s = one.clone();
            for &g in w {
                d = self.mul2(&d, &self.gen_comult[g]);
                e = &e * &self.gen_counit[g];
                s = self.mul(&self.gen_antipode[g], &s);
            }
            comult.push(d);
            counit.push(e);
            s_cols.push(s);
        }
        RawHopf {
            field: FieldSpec::Q,
            unit: crate::exactalg::vector::unit_vector(n, self.unit),
            antipode: Matrix::from_sparse_columns(n, &s_cols),
            labels: self.labels,
            mult: self.mult,
            comult,
            counit,
        }
    }
}

fn sv(terms: &[(usize, Scalar)]) -> SparseVec {
    terms.iter().cloned().collect()
}

/// Sweedler's four-dimensional algebra: `g² = 1`, `x² = 0`, `xg = -gx`,
/// `Δx = x⊗1 + g⊗x`. Basis `1, g, x, gx`, index `a + 2b` for `g^a x^b`.
pub fn sweedler_h4_raw() -> RawHopf {
    let n = 4;
    let mut mult = Vec::with_capacity(16);
    for p in 0..n {
        for q in 0..n {
            let (a, b, c, d) = (p % 2, p / 2, q % 2, q / 2);
            if b + d == 2 {
                mult.push(SparseVec::new());
            } else {
                let sign = if b * c == 1 { -1 } else { 1 };
                mult.push(SparseVec::single(
                    ((a + c) % 2) + 2 * (b + d),
                    Scalar::from_int(sign),
                ));
            }
        }
    }
    let one = Scalar::ONE;
    let p = Presentation {
        labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mult,
        unit: 0,
        words: vec![vec![], vec![0], vec![1], vec![0, 1]],
        gen_comult: vec![
            sv(&[(n + 1, one.clone())]),
            sv(&[(2 * n, one.clone()), (n + 2, one.clone())]),
        ],
        gen_counit: vec![Scalar::ONE, Scalar::ZERO],
        gen_antipode: vec![sv(&[(1, one.clone())]), sv(&[(3, Scalar::from_int(-1))])],
    };
    p.compile()
}

pub fn sweedler_h4() -> HopfAlgebra {
    build_validate(sweedler_h4_raw()).expect("H4 axioms")
}

/// The Kac–Paljutkin algebra: `x² = y² = 1`, `xy = yx`, `zx = yz`,
/// `zy = xz`, `z² = (1 + x + y - xy)/2`, with
/// `Δz = (1⊗1 + 1⊗x + y⊗1 - y⊗x)(z⊗z)/2`. Basis `x^a y^b z^c` at index
/// `a + 2b + 4c`.
pub fn kac_paljutkin_raw() -> RawHopf {
    let n = 8;
    let half = Scalar::ratio(1, 2);
    let idx = |a: usize, b: usize, c: usize| a + 2 * b + 4 * c;
    let mut mult = Vec::with_capacity(64);
    for p in 0..n {
        for q in 0..n {
            let (a, b, c) = (p % 2, (p / 2) % 2, p / 4);
            let (mut d, mut e, f) = (q % 2, (q / 2) % 2, q / 4);
            if c == 1 {
                std::mem::swap(&mut d, &mut e);
            }
            let (x, y) = ((a + d) % 2, (b + e) % 2);
            if c + f < 2 {
                mult.push(SparseVec::single(idx(x, y, c + f), Scalar::ONE));
            } else {
                mult.push(sv(&[
                    (idx(x, y, 0), half.clone()),
                    (idx(1 - x, y, 0), half.clone()),
                    (idx(x, 1 - y, 0), half.clone()),
                    (idx(1 - x, 1 - y, 0), -half.clone()),
                ]));
            }
        }
    }
    let one = Scalar::ONE;
    let t = |l: usize, r: usize| l * n + r;
    let z = idx(0, 0, 1);
    let xz = idx(1, 0, 1);
    let yz = idx(0, 1, 1);
    let words = (0..n)
        .map(|p| {
            let mut w = vec![0; p % 2];
            w.extend(vec![1; (p / 2) % 2]);
            w.extend(vec![2; p / 4]);
            w
        })
        .collect();
    let p = Presentation {
        labels: ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
            .map(String::from)
            .to_vec(),
        mult,
        unit: 0,
        words,
        gen_comult: vec![
            sv(&[(t(1, 1), one.clone())]),
            sv(&[(t(2, 2), one.clone())]),
            sv(&[
                (t(z, z), half.clone()),
                (t(z, xz), half.clone()),
                (t(yz, z), half.clone()),
                (t(yz, xz), -half.clone()),
            ]),
        ],
        gen_counit: vec![Scalar::ONE; 3],
        gen_antipode: vec![
            sv(&[(1, one.clone())]),
            sv(&[(2, one.clone())]),
            sv(&[(z, one)]),
        ],
    };
    p.compile()
}

pub fn kac_paljutkin() -> HopfAlgebra {
    build_validate(kac_paljutkin_raw()).expect("H8 axioms")
}

pub const TENSOR_NAMES: [&str; 5] = ["kC2xkC3", "kC2xk^C2", "H4xkC2", "kS3xk^C2", "H8xkC2"];

/// Resolves a corpus name: `kG`, `k^G`, `H4`, `H8`, `k`, or one of [`TENSOR_NAMES`].
pub fn corpus_algebra(name: &str) -> Result<HopfAlgebra> {
    if TENSOR_NAMES.contains(&name) {
        let (l, r) = name.split_once('x').expect("tensor name");
        return tensor_product(&corpus_algebra(l)?, &corpus_algebra(r)?);
    }
    match name {
        "k" => Ok(crate::hopfcore::trivial(FieldSpec::Q)),
        "H4" => Ok(sweedler_h4()),
        "H8" => Ok(kac_paljutkin()),
        _ => {
            if let Some(g) = name.strip_prefix("k^") {
                Ok(function_algebra(&group(g)?))
            } else if let Some(g) = name.strip_prefix('k') {
                Ok(group_algebra(&group(g)?))
            } else {
                Err(Error::Schema(format!("unknown corpus algebra {name}")))
            }
        }
    }
}

/// Every corpus algebra with its name: `kG`, `k^G` for each group, H4, H8
/// and the tensor products.
pub fn all_corpus() -> Vec<(String, Hopf)> {
    let mut names: Vec<String> = Vec::new();
    for g in GROUP_NAMES {
        names.push(format!("k{g}"));
        names.push(format!("k^{g}"));
    }
    names.push("H4".into());
    names.push("H8".into());
    names.extend(TENSOR_NAMES.iter().map(|s| s.to_string()));
    names
        .into_iter()
        .map(|n| {
            let h = corpus_algebra(&n).expect("corpus name");
            (n, Arc::new(h))
        })
        .collect()
}

/// Raw tables for every corpus algebra, for independent validation runs.
pub fn all_corpus_raw() -> Vec<(String, RawHopf)> {
    all_corpus()
        .into_iter()
        .map(|(n, h)| (n, h.to_raw()))
        .collect()
}

/// How a corpus algebra arises from a finite group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Realization {
    /// `kG`
    GroupAlgebra,
    /// `k^G`
    FunctionAlgebra,
}

/// The underlying group of `kG` or `k^G` (and `k` as `kC1`).
pub fn realization(name: &str) -> Option<(FiniteGroup, Realization)> {
    if name == "k" {
        return Some((group("C1").ok()?, Realization::GroupAlgebra));
    }
    if let Some(g) = name.strip_prefix("k^") {
        return Some((group(g).ok()?, Realization::FunctionAlgebra));
    }
    let g = name.strip_prefix('k')?;
    Some((group(g).ok()?, Realization::GroupAlgebra))
}
