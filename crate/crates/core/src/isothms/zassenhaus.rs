use crate::error::{Error, Result};
use crate::hopfcore::StructuredMap;
use crate::lattice::{is_normal_in, join, meet, Picture, QuantumSubgroup};

use super::certificate::{IsoCertificate, Theorem};
use super::subquotient::{canonical_map, Subquotient};

/// Lattice nodes of the butterfly for `A' ⊴ A`, `B' ⊴ B`.
#[derive(Clone, Debug)]
pub struct ButterflyNodes {
    /// `A ∧ B`
    pub meet: QuantumSubgroup,
    /// `A' ∧ B`
    pub a_inner_meet: QuantumSubgroup,
    /// `A ∧ B'`
    pub b_inner_meet: QuantumSubgroup,
    /// `A' ∨ (A∧B)` and `A' ∨ (A∧B')`
    pub left_top: QuantumSubgroup,
    pub left_bottom: QuantumSubgroup,
    /// `B' ∨ (A∧B)` and `B' ∨ (A'∧B)`
    pub right_top: QuantumSubgroup,
    pub right_bottom: QuantumSubgroup,
    /// `(A'∧B) ∨ (A∧B')`
    pub middle_bottom: QuantumSubgroup,
}

#[derive(Clone, Debug)]
pub struct Zassenhaus {
    pub nodes: ButterflyNodes,
    pub left: Subquotient,
    pub middle: Subquotient,
    pub right: Subquotient,
    /// `(A∧B) ∧ (A'∨(A∧B')) = D` and its mirror.
    pub modular_identity: bool,
    pub left_map: StructuredMap,
    pub right_map: StructuredMap,
    /// `left → right`
    pub certificate: IsoCertificate,
}

pub fn zassenhaus(
    a: &QuantumSubgroup,
    a_inner: &QuantumSubgroup,
    b: &QuantumSubgroup,
    b_inner: &QuantumSubgroup,
) -> Result<Zassenhaus> {
    for x in [a_inner, b, b_inner] {
        a.same_frame(x)?;
    }
    if !is_normal_in(a_inner, a)? {
        return Err(Error::NotNormal("A' is not normal in A".into()));
    }
    if !is_normal_in(b_inner, b)? {
        return Err(Error::NotNormal("B' is not normal in B".into()));
    }
    let ab = meet(a, b)?;
    let a1b = meet(a_inner, b)?;
    let ab1 = meet(a, b_inner)?;
    let nodes = ButterflyNodes {
        left_top: join(a_inner, &ab)?,
        left_bottom: join(a_inner, &ab1)?,
        right_top: join(b_inner, &ab)?,
        right_bottom: join(b_inner, &a1b)?,
        middle_bottom: join(&a1b, &ab1)?,
        meet: ab,
        a_inner_meet: a1b,
        b_inner_meet: ab1,
    };
    let modular_identity = meet(&nodes.meet, &nodes.left_bottom)? == nodes.middle_bottom
        && meet(&nodes.meet, &nodes.right_bottom)? == nodes.middle_bottom;
    if !modular_identity {
        return Err(Error::TheoremViolation(
            "(A∧B) ∧ (A'∨(A∧B')) differs from (A'∧B)∨(A∧B')".into(),
        ));
    }
    let sub = |t: &QuantumSubgroup, b: &QuantumSubgroup| {
        Subquotient::new(t, b).map_err(|e| match e {
            Error::NotNormal(m) => {
                Error::TheoremViolation(format!("butterfly node not normal: {m}"))
            }
            e => e,
        })
    };
    let left = sub(&nodes.left_top, &nodes.left_bottom)?;
    let right = sub(&nodes.right_top, &nodes.right_bottom)?;
    let middle = sub(&nodes.meet, &nodes.middle_bottom)?;
    let violation = || Error::TheoremViolation("butterfly map is not an isomorphism".into());
    let (left_map, right_map, map) = match a.picture() {
        Picture::Qg => {
            let l = canonical_map(&left, &middle)?;
            let r = canonical_map(&right, &middle)?;
            let composite = r.inverse().ok_or_else(violation)?.after(&l);
            (l, r, composite)
        }
        Picture::Dqg => {
            let l = canonical_map(&middle, &left)?;
            let r = canonical_map(&middle, &right)?;
            let composite = r.after(&l.inverse().ok_or_else(violation)?);
            (l, r, composite)
        }
    };
    for m in [&left_map, &right_map] {
        if !m.flags().is_hopf_iso() {
            return Err(violation());
        }
    }
    let certificate = IsoCertificate::new(map, Theorem::Zassenhaus)?;
    Ok(Zassenhaus {
        nodes,
        left,
        middle,
        right,
        modular_identity,
        left_map,
        right_map,
        certificate,
    })
}
