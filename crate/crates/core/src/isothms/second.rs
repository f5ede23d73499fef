use crate::error::{Error, Result};
use crate::exactalg::{EchelonBuilder, SparseVec};
use crate::hopfcore::StructuredMap;
use crate::lattice::{join, meet, Picture, QuantumSubgroup};

use super::certificate::{IsoCertificate, Theorem};
use super::subquotient::{canonical_map, Subquotient};

/// The canonical map of the second isomorphism theorem with its verdicts.
#[derive(Clone, Debug)]
pub struct SecondIso {
    /// `N = H ∧ K`
    pub meet: QuantumSubgroup,
    pub source: Subquotient,
    pub target: Subquotient,
    pub map: StructuredMap,
    /// `H ∨ K = G` (`Qg`), `kH·kK = kG` (`Dqg`).
    pub generation: bool,
    pub injective: bool,
    pub surjective: bool,
    pub certificate: Option<IsoCertificate>,
}

fn check_frame(h: &QuantumSubgroup, k: &QuantumSubgroup, picture: Picture) -> Result<()> {
    if h.picture() != picture || k.picture() != picture {
        return Err(Error::PictureMismatch(format!(
            "expected {picture} subgroups"
        )));
    }
    if !k.is_normal() {
        return Err(Error::NotNormal("K is not normal in the ambient".into()));
    }
    Ok(())
}

fn finish(
    meet: QuantumSubgroup,
    source: Subquotient,
    target: Subquotient,
    generation: bool,
    theorem: Theorem,
) -> Result<SecondIso> {
    let map = canonical_map(&source, &target)?;
    let rank = map.matrix().rank();
    let injective = rank == source.dim();
    let surjective = rank == target.dim();
    let bijective = injective && surjective;
    // the canonical map never loses its guaranteed half, and generation forces a bijection
    let guaranteed = match theorem {
        Theorem::SecondIsoQg => surjective,
        _ => injective,
    };
    if !guaranteed || (generation && !bijective) {
        return Err(Error::TheoremViolation(format!(
            "second isomorphism map {}x{} has rank {rank} with generation {generation}",
            target.dim(),
            source.dim()
        )));
    }
    let certificate = if bijective {
        Some(IsoCertificate::new(map.clone(), theorem)?)
    } else {
        None
    };
    Ok(SecondIso {
        meet,
        source,
        target,
        map,
        generation,
        injective,
        surjective,
        certificate,
    })
}

/// `O(G/K) → O(H/(H∧K))`, restriction of functions; surjective, and an
/// isomorphism when `H ∨ K = G`.
pub fn second_iso_qg(h: &QuantumSubgroup, k: &QuantumSubgroup) -> Result<SecondIso> {
    check_frame(h, k, Picture::Qg)?;
    let whole = QuantumSubgroup::whole(h.ambient(), Picture::Qg);
    let n = meet(h, k)?;
    let generation = join(h, k)?.is_whole();
    let source = Subquotient::new(&whole, k)?;
    let target = Subquotient::new(h, &n)?;
    finish(n, source, target, generation, Theorem::SecondIsoQg)
}

/// `kH/kH(kH∧kK)⁻ → kG/kG·kK⁻`, induced by inclusion; injective, and an
/// isomorphism when `kH·kK = kG`.
pub fn second_iso_dqg(h: &QuantumSubgroup, k: &QuantumSubgroup) -> Result<SecondIso> {
    check_frame(h, k, Picture::Dqg)?;
    let g = h.ambient();
    let dim = g.dim();
    let whole = QuantumSubgroup::whole(g, Picture::Dqg);
    let n = meet(h, k)?;
    let mut span = EchelonBuilder::new(dim);
    'outer: for x in h.space().basis_vectors() {
        let x = SparseVec::from_dense(x);
        for y in k.space().basis_vectors() {
            span.insert(g.mul_sparse(&x, &SparseVec::from_dense(y)).to_dense(dim));
            if span.is_full() {
                break 'outer;
            }
        }
    }
    let generation = span.is_full();
    let source = Subquotient::new(h, &n)?;
    let target = Subquotient::new(&whole, k)?;
    finish(n, source, target, generation, Theorem::SecondIsoDqg)
}

pub fn second_iso(h: &QuantumSubgroup, k: &QuantumSubgroup) -> Result<SecondIso> {
    match h.picture() {
        Picture::Qg => second_iso_qg(h, k),
        Picture::Dqg => second_iso_dqg(h, k),
    }
}
