#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use qlattice::corpus::{corpus_algebra, named_subgroup, realization, FiniteGroup, Subset};
use qlattice::exactalg::{Scalar, Subspace};
use qlattice::hopfcore::{Hopf, HopfAlgebra};
use qlattice::lattice::{subgroup_from_group, Picture, QuantumSubgroup};

pub fn h(name: &str) -> Hopf {
    Arc::new(corpus_algebra(name).unwrap())
}

pub fn arc(a: HopfAlgebra) -> Hopf {
    Arc::new(a)
}

/// Span of the named basis vectors.
pub fn span_labels(a: &HopfAlgebra, labels: &[&str]) -> Subspace {
    Subspace::coordinate(
        a.dim(),
        labels.iter().map(|l| {
            a.index_of(l)
                .unwrap_or_else(|| panic!("no basis label {l}"))
        }),
    )
}

/// Span of basis vectors whose group element lies in `s` (group algebras).
pub fn group_span(g: &FiniteGroup, s: Subset) -> Subspace {
    Subspace::coordinate(g.order(), g.elements_of(s))
}

/// Span of `δ_g`, `g ∉ s` (function algebras).
pub fn delta_complement(g: &FiniteGroup, s: Subset) -> Subspace {
    Subspace::coordinate(g.order(), g.elements_of(g.full() & !s))
}

pub fn vector(a: &HopfAlgebra, terms: &[(&str, i64)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; a.dim()];
    for (l, c) in terms {
        v[a.index_of(l).unwrap()] = Scalar::from_int(*c);
    }
    v
}

/// A group-derived ambient with every subgroup realized in one picture.
pub struct Realized {
    pub h: Hopf,
    pub g: FiniteGroup,
    pub subs: HashMap<Subset, QuantumSubgroup>,
}

impl Realized {
    pub fn named(&self, s: &str) -> &QuantumSubgroup {
        &self.subs[&named(&self.g, s)]
    }

    pub fn chain(&self, masks: &[Subset]) -> Vec<QuantumSubgroup> {
        masks.iter().map(|m| self.subs[m].clone()).collect()
    }
}

/// Realizes only the subgroups the picture supports (normal ones for
/// quotient-type realizations).
pub fn realize(name: &str, picture: Picture) -> Realized {
    let (g, r) = realization(name).unwrap();
    let a = h(name);
    let subs = g
        .subgroups()
        .into_iter()
        .filter_map(|k| {
            subgroup_from_group(&a, &g, r, picture, k)
                .ok()
                .map(|q| (k, q))
        })
        .collect();
    Realized { h: a, g, subs }
}

pub fn named(g: &FiniteGroup, s: &str) -> Subset {
    named_subgroup(g, s).unwrap_or_else(|| panic!("no subgroup {s} in {}", g.name()))
}
