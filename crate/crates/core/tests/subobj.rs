mod common;

use common::*;
use proptest::prelude::*;
use qlattice::corpus::{self, group, FiniteGroup};
use qlattice::exactalg::{Matrix, Scalar, Subspace};
use qlattice::hopfcore::{restrict, StructuredMap};
use qlattice::subobj::{
    classify, generate_closed, largest_hopf_ideal_within, quotient_by_hopf_ideal,
    quotient_module_coalgebra, sum_of_hopf_ideals, Closure,
};

#[test]
fn class_sum_in_ks3_is_neither_subalgebra_nor_coideal() {
    let a = h("kS3");
    let w = Subspace::from_vectors(6, vec![vector(&a, &[("e", 1), ("(123)", 1), ("(132)", 1)])]);
    let c = classify(&a, &w);
    assert!(!c.subalgebra);
    assert!(!c.left_coideal && !c.right_coideal);
    assert!(!c.hopf_subalgebra() && !c.hopf_ideal());
}

#[test]
fn algebra_closure_of_three_cycle_is_ka3() {
    let a = h("kS3");
    let g = group("S3").unwrap();
    let w = span_labels(&a, &["(123)"]);
    let closed = generate_closed(&a, &w, Closure::ALGEBRA);
    assert_eq!(closed.dim(), 3);
    assert_eq!(
        closed,
        group_span(&g, corpus::named_subgroup(&g, "A3").unwrap())
    );
    assert!(classify(&a, &closed).hopf_subalgebra());
}

#[test]
fn hopf_ideal_sum_and_largest_within_intersection() {
    let g = group("S3").unwrap();
    let a = h("k^S3");
    let i1 = delta_complement(&g, corpus::named_subgroup(&g, "A3").unwrap());
    let i2 = delta_complement(&g, corpus::named_subgroup(&g, "C2").unwrap());
    assert!(classify(&a, &i1).hopf_ideal() && classify(&a, &i2).hopf_ideal());
    let s = sum_of_hopf_ideals(&a, &i1, &i2).unwrap();
    assert_eq!(s.dim(), 5);
    let meet = i1.intersect(&i2);
    assert_eq!(meet.dim(), 2);
    assert!(largest_hopf_ideal_within(&a, &meet, true).is_zero());
}

#[test]
fn quotient_of_function_algebra_matches_subgroup() {
    let g = group("S3").unwrap();
    let a = h("k^S3");
    let a3 = corpus::named_subgroup(&g, "A3").unwrap();
    let q = quotient_by_hopf_ideal(&a, &delta_complement(&g, a3)).unwrap();
    assert_eq!(q.dim(), 3);
    assert!(q.projection.flags().is_hopf_map());
    let sub = FiniteGroup::from_permutations("A3", 3, &[FiniteGroup::perm(3, "(123)")]).unwrap();
    let target = arc(corpus::function_algebra(&sub));
    // identify bases by label
    let mut m = Matrix::zeros(3, 3);
    for (i, l) in q.quotient.labels().iter().enumerate() {
        m[(target.index_of(l).unwrap(), i)] = Scalar::ONE;
    }
    assert!(StructuredMap::new(q.quotient.clone(), target, m)
        .flags()
        .is_hopf_iso());
}

#[test]
fn non_ideal_quotient_is_rejected() {
    let a = h("kS3");
    let w = span_labels(&a, &["(12)"]);
    assert!(quotient_by_hopf_ideal(&a, &w).is_err());
}

#[test]
fn module_quotients_of_ks3() {
    let g = group("S3").unwrap();
    let a = h("kS3");
    let q = quotient_module_coalgebra(
        &a,
        &group_span(&g, corpus::named_subgroup(&g, "A3").unwrap()),
    )
    .unwrap();
    assert_eq!(q.dim(), 2);
    let q = quotient_module_coalgebra(
        &a,
        &group_span(&g, corpus::named_subgroup(&g, "C2").unwrap()),
    )
    .unwrap();
    assert_eq!(q.dim(), 3);
    // ε on the unit class is 1
    let u = q.unit_class();
    let eps: Scalar = u
        .iter()
        .fold(Scalar::ZERO, |acc, (i, c)| &acc + &(c * &q.counit[i]));
    assert_eq!(eps, Scalar::ONE);
}

#[test]
fn module_quotient_requires_coideal_subalgebra() {
    let a = h("kS3");
    let w = Subspace::from_vectors(
        6,
        vec![a.unit().to_vec(), vector(&a, &[("(12)", 1), ("(13)", 1)])],
    );
    assert!(quotient_module_coalgebra(&a, &w).is_err());
}

#[test]
fn hopf_ideals_of_function_algebras_match_subgroups() {
    let g = group("S4").unwrap();
    let a = h("k^S4");
    for k in g.subgroups() {
        assert!(classify(&a, &delta_complement(&g, k)).hopf_ideal());
    }
}

#[test]
fn hopf_subalgebras_restrict() {
    let g = group("D4").unwrap();
    let a = h("kD4");
    for k in g.subgroups() {
        let w = group_span(&g, k);
        assert!(classify(&a, &w).hopf_subalgebra());
        assert_eq!(restrict(&a, &w).unwrap().dim(), g.order_of(k));
    }
}

#[test]
fn h4_coradical_is_a_hopf_subalgebra() {
    let a = h("H4");
    let w = span_labels(&a, &["1", "g"]);
    let c = classify(&a, &w);
    assert!(c.hopf_subalgebra());
    let x = span_labels(&a, &["x"]);
    let closed = generate_closed(&a, &x, Closure::ALL);
    assert_eq!(closed.dim(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_of_group_elements_is_generated_subgroup(mask in 0u32..(1 << 24)) {
        let g = group("S4").unwrap();
        let a = h("kS4");
        let closed = generate_closed(&a, &group_span(&g, mask), Closure::ALL);
        prop_assert_eq!(closed, group_span(&g, g.generate(mask | 1)));
    }

    #[test]
    fn largest_hopf_ideal_in_coordinate_subspace(mask in 0u32..(1 << 24)) {
        let g = group("S4").unwrap();
        let a = h("k^S4");
        // Hopf ideals are δ-spans of complements of subgroups; the largest one
        // inside span{δ_g : g ∈ T} belongs to the subgroup generated by G∖T
        let w = Subspace::coordinate(24, g.elements_of(mask));
        let k = g.generate(g.full() & !mask);
        prop_assert_eq!(largest_hopf_ideal_within(&a, &w, true), delta_complement(&g, k));
    }

    #[test]
    fn generate_closed_is_idempotent_and_extensive(seed in prop::collection::vec(-2i64..3, 8)) {
        let a = h("H8");
        let w = Subspace::from_vectors(8, vec![seed.iter().map(|&x| Scalar::from_int(x)).collect()]);
        let c = generate_closed(&a, &w, Closure::ALL);
        prop_assert!(w.is_subspace_of(&c));
        prop_assert_eq!(generate_closed(&a, &c, Closure::ALL), c.clone());
        prop_assert!(classify(&a, &c).hopf_subalgebra());
    }
}
