use std::path::Path;
use std::sync::Arc;

use qlattice::corpus::{corpus_algebra, named_subgroup, realization, FiniteGroup, Realization};
use qlattice::error::{Error, Result};
use qlattice::hopfcore::Hopf;
use qlattice::io::{load_hopf, load_subspace};
use qlattice::lattice::{subgroup_from_group, Picture, QuantumSubgroup};

pub struct Ambient {
    pub hopf: Hopf,
    pub group: Option<(FiniteGroup, Realization)>,
}

/// `corpus:<name>` or a path to a structure-constant file.
pub fn algebra(spec: &str) -> Result<Ambient> {
    match spec.strip_prefix("corpus:") {
        Some(name) => Ok(Ambient {
            hopf: Arc::new(corpus_algebra(name)?),
            group: realization(name),
        }),
        None => Ok(Ambient {
            hopf: Arc::new(load_hopf(spec)?),
            group: None,
        }),
    }
}

/// The natural picture: `QG` for function algebras of groups, `DQG` for
/// group algebras; otherwise `QG` exactly when commutative and not cocommutative.
pub fn picture(a: &Ambient, requested: Option<Picture>) -> Picture {
    requested.unwrap_or(match &a.group {
        Some((_, Realization::FunctionAlgebra)) => Picture::Qg,
        Some((_, Realization::GroupAlgebra)) => Picture::Dqg,
        None if a.hopf.is_commutative() && !a.hopf.is_cocommutative() => Picture::Qg,
        None => Picture::Dqg,
    })
}

/// `G`, `1`, a subspace file, or a named subgroup of a corpus group.
pub fn subgroup(a: &Ambient, picture: Picture, spec: &str) -> Result<QuantumSubgroup> {
    match spec {
        "G" => return Ok(QuantumSubgroup::whole(&a.hopf, picture)),
        "1" => return Ok(QuantumSubgroup::trivial(&a.hopf, picture)),
        _ => {}
    }
    if Path::new(spec).is_file() {
        return QuantumSubgroup::new(&a.hopf, picture, load_subspace(spec)?);
    }
    let unknown = || {
        Error::Schema(format!(
            "unknown subgroup {spec:?}: not a file or a named subgroup"
        ))
    };
    let (g, r) = a.group.as_ref().ok_or_else(unknown)?;
    let s = named_subgroup(g, spec).ok_or_else(unknown)?;
    subgroup_from_group(&a.hopf, g, *r, picture, s).map_err(|e| {
        Error::Schema(format!(
            "subgroup {spec} is not realized in the {picture} picture of this algebra: {e}"
        ))
    })
}

pub fn subgroups<const N: usize>(
    a: &Ambient,
    picture: Picture,
    specs: &[String],
) -> Result<[QuantumSubgroup; N]> {
    if specs.len() != N {
        return Err(Error::Schema(format!(
            "expected {N} --subgroup arguments, found {}",
            specs.len()
        )));
    }
    let v = specs
        .iter()
        .map(|s| subgroup(a, picture, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(v.try_into().unwrap_or_else(|_| unreachable!()))
}

/// Comma-separated terms; `G` and `1` are added at the ends when missing.
pub fn chain(a: &Ambient, picture: Picture, spec: &str) -> Result<Vec<QuantumSubgroup>> {
    let mut out = vec![QuantumSubgroup::whole(&a.hopf, picture)];
    for term in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let x = subgroup(a, picture, term)?;
        if !(out.len() == 1 && x.is_whole()) {
            out.push(x);
        }
    }
    if !out.last().is_some_and(QuantumSubgroup::is_trivial) {
        out.push(QuantumSubgroup::trivial(&a.hopf, picture));
    }
    Ok(out)
}
