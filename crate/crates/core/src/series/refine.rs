use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::isothms::{zassenhaus, IsoCertificate, Subquotient, Zassenhaus};
use crate::lattice::QuantumSubgroup;

use super::chain::SubnormalSeries;

/// Cell `(row, col)`, 1-based: the butterfly of `G_row ⊴ G_{row-1}` against
/// `H_col ⊴ H_{col-1}`. Its left wing is a factor of the first refinement,
/// its right wing a factor of the second.
#[derive(Clone, Debug)]
pub struct GridCell {
    pub row: usize,
    pub col: usize,
    pub butterfly: Zassenhaus,
}

impl GridCell {
    pub fn is_trivial(&self) -> bool {
        self.butterfly.left.dim() == 1
    }
}

/// One refined chain, kept at grid level.
#[derive(Clone, Debug)]
pub struct Refinement {
    /// `grid[i-1][j] = G_i ∨ (G_{i-1} ∧ H_j)`, `0 ≤ j ≤ l`.
    pub grid: Vec<Vec<QuantumSubgroup>>,
    /// The grid read row by row with repetitions dropped.
    pub chain: Vec<QuantumSubgroup>,
    /// `collapse[i-1][j-1]`: index into `factors` of cell `(i, j)`, `None` when trivial.
    pub collapse: Vec<Vec<Option<usize>>>,
    pub factors: Vec<Subquotient>,
}

impl Refinement {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(Subquotient::dim).collect()
    }
}

/// Equivalent refinements of two series with a verified isomorphism for
/// every paired factor.
#[derive(Clone, Debug)]
pub struct SeriesEquivalenceCertificate {
    pub first: Refinement,
    pub second: Refinement,
    pub cells: Vec<GridCell>,
    /// `pairing[f]`: the factor of `second` matched with factor `f` of `first`.
    pub pairing: Vec<usize>,
    /// `isos[f]: first.factors[f] → second.factors[pairing[f]]`.
    pub isos: Vec<IsoCertificate>,
}

impl SeriesEquivalenceCertificate {
    pub fn len(&self) -> usize {
        self.pairing.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairing.is_empty()
    }

    /// Rechecks lengths, bijectivity of the pairing and every isomorphism.
    pub fn verify(&self) -> bool {
        let n = self.pairing.len();
        if self.first.len() != n || self.second.len() != n || self.isos.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in &self.pairing {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        self.isos
            .iter()
            .zip(&self.pairing)
            .enumerate()
            .all(|(f, (iso, &p))| {
                iso.source().same_structure(&self.first.factors[f].algebra)
                    && iso.target().same_structure(&self.second.factors[p].algebra)
                    && iso.verify()
            })
    }
}

fn violation(e: Error) -> Error {
    match e {
        Error::NotNormal(m) | Error::NotContained(m) => {
            Error::TheoremViolation(format!("butterfly precondition: {m}"))
        }
        e => e,
    }
}

fn collapse(
    rows: usize,
    cols: usize,
    trivial: impl Fn(usize, usize) -> bool,
) -> (Vec<Vec<Option<usize>>>, usize) {
    let mut next = 0;
    let map = (1..=rows)
        .map(|r| {
            (1..=cols)
                .map(|c| {
                    (!trivial(r, c)).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    (map, next)
}

/// Refines `first` by `G_{ij} = G_i ∨ (G_{i-1} ∧ H_j)` and `second`
/// symmetrically, and pairs cell `(i, j)` of one with cell `(j, i)` of the
/// other through the butterfly.
pub fn schreier_refine(
    first: &SubnormalSeries,
    second: &SubnormalSeries,
) -> Result<SeriesEquivalenceCertificate> {
    first.chain()[0].same_frame(&second.chain()[0])?;
    let (g, h) = (first.chain(), second.chain());
    let (k, l) = (first.len(), second.len());
    let cells: Vec<GridCell> = (1..=k)
        .flat_map(|i| (1..=l).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| {
            let butterfly = zassenhaus(&g[i - 1], &g[i], &h[j - 1], &h[j]).map_err(violation)?;
            Ok(GridCell {
                row: i,
                col: j,
                butterfly,
            })
        })
        .collect::<Result<_>>()?;
    let cell = |i: usize, j: usize| &cells[(i - 1) * l + (j - 1)];

    let mut first_grid = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = vec![g[i - 1].clone()];
        for j in 1..=l {
            let n = &cell(i, j).butterfly.nodes;
            if n.left_top != row[j - 1] {
                return Err(Error::TheoremViolation(format!(
                    "first refinement breaks at cell ({i}, {j})"
                )));
            }
            row.push(n.left_bottom.clone());
        }
        if row[l] != g[i] {
            return Err(Error::TheoremViolation(format!(
                "first refinement row {i} does not end at G_{i}"
            )));
        }
        first_grid.push(row);
    }
    let mut second_grid = Vec::with_capacity(l);
    for j in 1..=l {
        let mut row = vec![h[j - 1].clone()];
        for i in 1..=k {
            let n = &cell(i, j).butterfly.nodes;
            if n.right_top != row[i - 1] {
                return Err(Error::TheoremViolation(format!(
                    "second refinement breaks at cell ({j}, {i})"
                )));
            }
            row.push(n.right_bottom.clone());
        }
        if row[k] != h[j] {
            return Err(Error::TheoremViolation(format!(
                "second refinement row {j} does not end at H_{j}"
            )));
        }
        second_grid.push(row);
    }

    let (first_collapse, n1) = collapse(k, l, |i, j| cell(i, j).is_trivial());
    let (second_collapse, n2) = collapse(l, k, |j, i| cell(i, j).is_trivial());
    if n1 != n2 {
        return Err(Error::TheoremViolation(format!(
            "refinements have {n1} and {n2} nontrivial factors"
        )));
    }
    let mut first_factors = Vec::with_capacity(n1);
    let mut second_factors = vec![None; n2];
    let mut pairing = Vec::with_capacity(n1);
    let mut isos = Vec::with_capacity(n1);
    for i in 1..=k {
        for j in 1..=l {
            let c = cell(i, j);
            let Some(p) = second_collapse[j - 1][i - 1] else {
                if first_collapse[i - 1][j - 1].is_some() {
                    return Err(Error::TheoremViolation(format!(
                        "cell ({i}, {j}) is trivial on one side only"
                    )));
                }
                continue;
            };
            first_factors.push(c.butterfly.left.clone());
            second_factors[p] = Some(c.butterfly.right.clone());
            pairing.push(p);
            isos.push(c.butterfly.certificate.clone());
        }
    }
    let chain_of = |grid: &[Vec<QuantumSubgroup>]| {
        let mut out: Vec<QuantumSubgroup> =
            vec![grid.first().map_or_else(|| g[0].clone(), |r| r[0].clone())];
        for x in grid.iter().flat_map(|r| r.iter().skip(1)) {
            if out.last() != Some(x) {
                out.push(x.clone());
            }
        }
        out
    };
    Ok(SeriesEquivalenceCertificate {
        first: Refinement {
            chain: chain_of(&first_grid),
            grid: first_grid,
            collapse: first_collapse,
            factors: first_factors,
        },
        second: Refinement {
            chain: chain_of(&second_grid),
            grid: second_grid,
            collapse: second_collapse,
            factors: second_factors
                .into_iter()
                .map(|f| f.expect("every paired slot is filled"))
                .collect(),
        },
        cells,
        pairing,
        isos,
    })
}
