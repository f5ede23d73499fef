use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::cosemisimple_test;

use super::ops::{leq, LatticeMemo};
use super::subgroup::QuantumSubgroup;

/// Theorem mode turns an inequality under satisfied hypotheses into an error;
/// survey mode only records it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModularMode {
    Theorem,
    Survey,
}

/// `H ∧ (M ∨ L)` against `(H ∧ M) ∨ L` for `L ≤ H`.
#[derive(Clone, Debug)]
pub struct ModularReport {
    pub lhs: QuantumSubgroup,
    pub rhs: QuantumSubgroup,
    pub equal: bool,
    /// `(H ∧ M) ∨ L ≤ H ∧ (M ∨ L)`, true in every lattice.
    pub easy_inclusion: bool,
    pub m_normal: bool,
    pub l_normalizes_m: bool,
    pub cosemisimple: bool,
}

impl ModularReport {
    /// Either `M` is normal, or `L` normalizes `M` in a cosemisimple ambient.
    pub fn hypotheses_hold(&self) -> bool {
        self.m_normal || (self.l_normalizes_m && self.cosemisimple)
    }
}

/// Shares memo tables and the cosemisimplicity verdict across many checks
/// over one ambient.
pub struct ModularChecker {
    memo: LatticeMemo,
    cosemisimple: bool,
}

impl ModularChecker {
    pub fn new(ambient: &crate::hopfcore::HopfAlgebra) -> Self {
        ModularChecker {
            memo: LatticeMemo::new(),
            cosemisimple: cosemisimple_test(ambient),
        }
    }

    pub fn memo(&self) -> &LatticeMemo {
        &self.memo
    }

    pub fn check(
        &self,
        h: &QuantumSubgroup,
        l: &QuantumSubgroup,
        m: &QuantumSubgroup,
        mode: ModularMode,
    ) -> Result<ModularReport> {
        if !leq(l, h)? {
            return Err(Error::NotContained("L is not contained in H".into()));
        }
        h.same_frame(m)?;
        let whole = QuantumSubgroup::whole(h.ambient(), h.picture());
        let lhs = self.memo.meet(h, &self.memo.join(m, l)?)?;
        let rhs = self.memo.join(&self.memo.meet(h, m)?, l)?;
        let report = ModularReport {
            equal: lhs == rhs,
            easy_inclusion: leq(&rhs, &lhs)?,
            m_normal: self.memo.normalizes(&whole, m)?,
            l_normalizes_m: self.memo.normalizes(l, m)?,
            cosemisimple: self.cosemisimple,
            lhs,
            rhs,
        };
        if !report.easy_inclusion {
            return Err(Error::TheoremViolation(
                "(H∧M)∨L is not below H∧(M∨L)".into(),
            ));
        }
        if mode == ModularMode::Theorem && report.hypotheses_hold() && !report.equal {
            return Err(Error::TheoremViolation(format!(
                "modular law fails: H∧(M∨L) has dim {}, (H∧M)∨L has dim {}",
                report.lhs.dim(),
                report.rhs.dim()
            )));
        }
        Ok(report)
    }
}

pub fn check_modular_law(
    h: &QuantumSubgroup,
    l: &QuantumSubgroup,
    m: &QuantumSubgroup,
    mode: ModularMode,
) -> Result<ModularReport> {
    ModularChecker::new(h.ambient()).check(h, l, m, mode)
}

/// Indices `(h, l, m)` into the surveyed subgroup list.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, Default, Serialize)]
pub struct SurveySummary {
    pub subgroups: usize,
    pub triples: usize,
    pub equal: usize,
    pub with_hypotheses: usize,
    /// Hypotheses hold but the sides differ.
    pub violations: Vec<Triple>,
    /// Sides differ with the hypotheses failing.
    pub unconstrained_failures: Vec<Triple>,
}

/// Every triple `(H, L, M)` with `L ≤ H` from `subgroups`, data-parallel.
pub fn modular_survey(
    checker: &ModularChecker,
    subgroups: &[QuantumSubgroup],
) -> Result<SurveySummary> {
    let n = subgroups.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|h| (0..n).map(move |l| (h, l)))
        .filter(|&(h, l)| leq(&subgroups[l], &subgroups[h]).unwrap_or(false))
        .collect();
    let results: Vec<(Triple, ModularReport)> = pairs
        .par_iter()
        .flat_map_iter(|&(h, l)| (0..n).map(move |m| (h, l, m)))
        .map(|(h, l, m)| {
            checker
                .check(
                    &subgroups[h],
                    &subgroups[l],
                    &subgroups[m],
                    ModularMode::Survey,
                )
                .map(|r| ((h, l, m), r))
        })
        .collect::<Result<_>>()?;
    let mut s = SurveySummary {
        subgroups: n,
        triples: results.len(),
        ..Default::default()
    };
    for (t, r) in results {
        s.equal += r.equal as usize;
        s.with_hypotheses += r.hypotheses_hold() as usize;
        if !r.equal {
            if r.hypotheses_hold() {
                s.violations.push(t);
            } else {
                s.unconstrained_failures.push(t);
            }
        }
    }
    Ok(s)
}
