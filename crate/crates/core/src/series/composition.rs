use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopfcore::{dual, grouplikes, Hopf};
use crate::lattice::{enumerate_subgroups, is_normal_in, leq, Picture, QuantumSubgroup};

use super::chain::{validate_series, SubnormalSeries};
use super::refine::{schreier_refine, SeriesEquivalenceCertificate};

/// Every quantum subgroup, for ambients whose lattice in `picture` comes
/// from a complete group of grouplikes: `kG` in `Dqg`, `k^G` in `Qg`.
pub fn enumerable_subgroups(h: &Hopf, picture: Picture) -> Result<Vec<QuantumSubgroup>> {
    let source = match picture {
        Picture::Dqg => h.clone(),
        Picture::Qg => Arc::new(dual(h)),
    };
    if grouplikes(&source).len() != h.dim() {
        return Err(Error::Unsupported(format!(
            "the {picture} lattice of this algebra is not enumerable from grouplikes; supply the chains"
        )));
    }
    enumerate_subgroups(h, picture, None)
}

/// Rejects the series if some candidate sits strictly between two adjacent
/// terms and is normal in the upper one with the lower one normal in it.
pub fn check_composition(series: &SubnormalSeries, candidates: &[QuantumSubgroup]) -> Result<()> {
    let chain = series.chain();
    for i in 1..chain.len() {
        let (upper, lower) = (&chain[i - 1], &chain[i]);
        for n in candidates {
            if n == upper || n == lower || !leq(lower, n)? || !leq(n, upper)? {
                continue;
            }
            if is_normal_in(n, upper)? && is_normal_in(lower, n)? {
                return Err(Error::NotComposition {
                    link: i,
                    refining: Box::new(n.space().clone()),
                });
            }
        }
    }
    Ok(())
}

/// Composition series admit no strict refinement, so the Schreier
/// refinements reproduce the inputs and the certificate pairs their factors.
pub fn jordan_holder(
    first: &SubnormalSeries,
    second: &SubnormalSeries,
    candidates: &[QuantumSubgroup],
) -> Result<SeriesEquivalenceCertificate> {
    check_composition(first, candidates)?;
    check_composition(second, candidates)?;
    let cert = schreier_refine(first, second)?;
    if cert.first.chain != first.chain() || cert.second.chain != second.chain() {
        return Err(Error::TheoremViolation(
            "a composition series was strictly refined".into(),
        ));
    }
    Ok(cert)
}

/// Greedy descent through maximal normal subgroups; ties go to the
/// smallest presenting subspace.
pub fn find_composition_series(h: &Hopf, picture: Picture) -> Result<SubnormalSeries> {
    let candidates = enumerable_subgroups(h, picture)?;
    let mut chain = vec![QuantumSubgroup::whole(h, picture)];
    loop {
        let top = chain.last().expect("nonempty");
        if top.is_trivial() {
            break;
        }
        let mut normal = Vec::new();
        for n in &candidates {
            if n != top && is_normal_in(n, top)? {
                normal.push(n);
            }
        }
        let mut maximal = Vec::new();
        for &n in &normal {
            let mut covered = false;
            for &m in &normal {
                if m != n && leq(n, m)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                maximal.push(n);
            }
        }
        let next = maximal
            .into_iter()
            .min_by(|a, b| a.space().cmp(b.space()))
            .ok_or_else(|| {
                Error::TheoremViolation(
                    "nontrivial subgroup without a proper normal subgroup in the lattice".into(),
                )
            })?;
        chain.push(next.clone());
    }
    validate_series(&chain)
}
