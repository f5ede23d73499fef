use std::collections::BTreeSet;

use crate::corpus::{FiniteGroup, Realization, Subset};
use crate::error::{Error, Result};
use crate::exactalg::{EchelonBuilder, Matrix, Scalar, Subspace};
use crate::hopfcore::{dual, grouplikes, Hopf};

use super::ops::{join, meet};
use super::subgroup::{Picture, QuantumSubgroup};

fn indicator(g: &FiniteGroup, elems: impl IntoIterator<Item = usize>) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; g.order()];
    for x in elems {
        v[x] = Scalar::ONE;
    }
    v
}

/// The quantum subgroup attached to a subgroup `k` of the underlying group.
/// `kG` realizes every subgroup in `Dqg` and normal ones in `Qg` (quotients
/// `kG → k[G/N]`); `k^G` realizes every subgroup in `Qg` and normal ones in
/// `Dqg` (`k^{G/N}`).
pub fn subgroup_from_group(
    h: &Hopf,
    g: &FiniteGroup,
    realization: Realization,
    picture: Picture,
    k: Subset,
) -> Result<QuantumSubgroup> {
    let n = g.order();
    let cosets = || {
        let mut seen: Subset = 0;
        let mut out = Vec::new();
        for x in 0..n {
            if seen >> x & 1 == 0 {
                let c: Vec<usize> = g.elements_of(k).into_iter().map(|a| g.mul(x, a)).collect();
                for &y in &c {
                    seen |= 1 << y;
                }
                out.push(c);
            }
        }
        out
    };
    let space = match (realization, picture) {
        (Realization::GroupAlgebra, Picture::Dqg) => Subspace::coordinate(n, g.elements_of(k)),
        (Realization::FunctionAlgebra, Picture::Qg) => {
            Subspace::coordinate(n, g.elements_of(g.full() & !k))
        }
        (Realization::GroupAlgebra, Picture::Qg) => {
            let mut b = EchelonBuilder::new(n);
            for x in 0..n {
                for a in g.elements_of(k) {
                    let mut v = vec![Scalar::ZERO; n];
                    v[x] = Scalar::ONE;
                    let y = g.mul(x, a);
                    v[y] = &v[y] - &Scalar::ONE;
                    b.insert(v);
                }
            }
            b.finish()
        }
        (Realization::FunctionAlgebra, Picture::Dqg) => {
            Subspace::from_vectors(n, cosets().into_iter().map(|c| indicator(g, c)))
        }
    };
    QuantumSubgroup::new(h, picture, space)
}

/// Subgroup-derived quantum subgroups. With group data: every subgroup (or
/// every normal subgroup, depending on the picture). Without: Hopf
/// subalgebras spanned by subgroups of the grouplikes, and in `Qg` the
/// annihilators of those of the dual; closed under meet and join.
pub fn enumerate_subgroups(
    h: &Hopf,
    picture: Picture,
    group: Option<(&FiniteGroup, Realization)>,
) -> Result<Vec<QuantumSubgroup>> {
    let mut found: Vec<QuantumSubgroup> = match group {
        Some((g, r)) => {
            let classical = matches!(
                (r, picture),
                (Realization::GroupAlgebra, Picture::Dqg)
                    | (Realization::FunctionAlgebra, Picture::Qg)
            );
            let subs = if classical {
                g.subgroups()
            } else {
                g.normal_subgroups()
            };
            subs.into_iter()
                .map(|k| subgroup_from_group(h, g, r, picture, k))
                .collect::<Result<_>>()?
        }
        None => match picture {
            Picture::Dqg => grouplike_subalgebras(h)?
                .into_iter()
                .map(|s| QuantumSubgroup::dqg(h, s))
                .collect::<Result<_>>()?,
            Picture::Qg => {
                let d = std::sync::Arc::new(dual(h));
                grouplike_subalgebras(&d)?
                    .into_iter()
                    .map(|b| QuantumSubgroup::qg(h, annihilator(&b)))
                    .collect::<Result<_>>()?
            }
        },
    };
    found.push(QuantumSubgroup::whole(h, picture));
    found.push(QuantumSubgroup::trivial(h, picture));
    close_under_lattice_ops(found)
}

fn close_under_lattice_ops(start: Vec<QuantumSubgroup>) -> Result<Vec<QuantumSubgroup>> {
    let mut all: Vec<QuantumSubgroup> = Vec::new();
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    for s in start {
        if seen.insert(s.space().clone()) {
            all.push(s);
        }
    }
    let mut frontier = 0;
    while frontier < all.len() {
        let end = all.len();
        let mut new = Vec::new();
        for i in frontier..end {
            for j in 0..end {
                for r in [meet(&all[i], &all[j])?, join(&all[i], &all[j])?] {
                    if seen.insert(r.space().clone()) {
                        new.push(r);
                    }
                }
            }
        }
        frontier = end;
        all.extend(new);
    }
    all.sort_by(|a, b| (a.dim(), a.space()).cmp(&(b.dim(), b.space())));
    Ok(all)
}

/// `{x : b(x) = 0 ∀ b ∈ B}` for `B` given in dual-basis coordinates.
fn annihilator(b: &Subspace) -> Subspace {
    let m = Matrix::from_rows(
        b.ambient_dim(),
        b.basis_vectors().map(|r| r.to_vec()).collect(),
    );
    m.kernel()
}

fn grouplike_subalgebras(h: &Hopf) -> Result<Vec<Subspace>> {
    let gl = grouplikes(h);
    let Some(table) = gl.multiplication_table() else {
        return Err(Error::Unsupported(
            "grouplikes do not close under multiplication".into(),
        ));
    };
    if table.len() > crate::corpus::groups::MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "{} grouplikes exceed the enumeration limit",
            table.len()
        )));
    }
    let labels = (0..table.len()).map(|i| format!("g{i}")).collect();
    let g = FiniteGroup::from_table("grouplikes", labels, table)?;
    let n = h.dim();
    Ok(g.subgroups()
        .into_iter()
        .map(|k| {
            Subspace::from_vectors(
                n,
                g.elements_of(k)
                    .into_iter()
                    .map(|i| gl.elements[i].coords().to_vec()),
            )
        })
        .collect())
}
