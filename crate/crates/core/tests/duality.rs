mod common;

use common::*;
use qlattice::corpus::{self, group, FiniteGroup, Subset, GROUP_NAMES};
use qlattice::duality::{
    ad_action, ad_invariance, cd_of_quotient, cd_of_subalgebra, coadjoint_descends,
    largest_cocommutative, normality, AdSide, NormalityInput,
};
use qlattice::error::Error;
use qlattice::exactalg::{Scalar, SparseVec, Subspace};
use qlattice::subobj::{classify, quotient_by_hopf_ideal};

fn sub(g: &FiniteGroup, name: &str) -> Subset {
    corpus::named_subgroup(g, name).unwrap()
}

/// Functions on `G` constant on right cosets `Kx`: a right coideal subalgebra of `k^G`.
fn coset_functions(g: &FiniteGroup, k: Subset) -> Subspace {
    let mut seen = 0 as Subset;
    let mut vecs = Vec::new();
    for x in 0..g.order() {
        if seen >> x & 1 == 1 {
            continue;
        }
        let coset: Vec<usize> = g.elements_of(k).into_iter().map(|a| g.mul(a, x)).collect();
        let mut v = vec![Scalar::ZERO; g.order()];
        for &y in &coset {
            v[y] = Scalar::ONE;
            seen |= 1 << y;
        }
        vecs.push(v);
    }
    Subspace::from_vectors(g.order(), vecs)
}

#[test]
fn cd_of_normal_and_non_normal_subalgebras_of_ks3() {
    let g = group("S3").unwrap();
    let a = h("kS3");
    let q = cd_of_subalgebra(&a, &group_span(&g, sub(&g, "A3"))).unwrap();
    assert!(q.is_hopf());
    assert_eq!(q.dim(), 2);
    let q = cd_of_subalgebra(&a, &group_span(&g, sub(&g, "C2"))).unwrap();
    assert!(!q.is_hopf());
    assert_eq!(q.dim(), 3);
    assert_eq!(cd_of_quotient(&q), group_span(&g, sub(&g, "C2")));
    let q = cd_of_subalgebra(&a, &Subspace::from_vectors(6, vec![a.unit().to_vec()])).unwrap();
    assert_eq!(q.dim(), 6);
}

#[test]
fn cd_of_coset_functions_is_function_algebra_on_subgroup() {
    let g = group("S3").unwrap();
    let a = h("k^S3");
    let q = cd_of_subalgebra(&a, &coset_functions(&g, sub(&g, "A3"))).unwrap();
    assert!(q.is_hopf());
    assert_eq!(q.dim(), 3);
}

#[test]
fn cd_of_trivial_quotients() {
    let a = h("H8");
    let id = quotient_by_hopf_ideal(&a, &Subspace::zero(8)).unwrap();
    assert_eq!(
        cd_of_quotient(&id),
        Subspace::from_vectors(8, vec![a.unit().to_vec()])
    );
    let aug = Subspace::full(8).kernel_of(|x| SparseVec::single(0, a.counit_of(x)));
    let eps = quotient_by_hopf_ideal(&a, &aug).unwrap();
    assert_eq!(cd_of_quotient(&eps), Subspace::full(8));
}

#[test]
fn cd_round_trip_on_all_subgroups() {
    for name in ["S4", "D4", "Q8"] {
        let g = group(name).unwrap();
        let ka = h(&format!("k{name}"));
        let fa = h(&format!("k^{name}"));
        for k in g.subgroups() {
            let w = group_span(&g, k);
            assert_eq!(
                cd_of_quotient(&cd_of_subalgebra(&ka, &w).unwrap()),
                w,
                "k{name}"
            );
            let w = coset_functions(&g, k);
            assert!(classify(&fa, &w).right_coideal_subalgebra());
            let q = cd_of_subalgebra(&fa, &w).unwrap();
            assert_eq!(q.dim(), g.order_of(k));
            assert_eq!(cd_of_quotient(&q), w, "k^{name}");
        }
    }
}

#[test]
fn adjoint_witness_for_transposition_subgroup() {
    let g = group("S3").unwrap();
    let a = h("kS3");
    assert!(ad_invariance(&a, &group_span(&g, sub(&g, "A3")), AdSide::Right).invariant);
    let c2 = group_span(&g, sub(&g, "C2"));
    for side in [AdSide::Right, AdSide::Left] {
        let r = ad_invariance(&a, &c2, side);
        assert!(!r.invariant);
        let w = r.witness.unwrap();
        assert!(!c2.contains(&w.image));
        assert_eq!(
            ad_action(&a, w.x, &SparseVec::from_dense(&w.a), side).to_dense(6),
            w.image
        );
    }
    // conjugating by (123) moves (12) to a different transposition
    let x = a.index_of("(123)").unwrap();
    let t = SparseVec::single(a.index_of("(12)").unwrap(), Scalar::ONE);
    assert!(!c2.contains_sparse(&ad_action(&a, x, &t, AdSide::Left)));
    let one = Subspace::from_vectors(6, vec![a.unit().to_vec()]);
    assert!(ad_invariance(&a, &one, AdSide::Left).invariant);
}

#[test]
fn coadjoint_descent() {
    let g = group("S3").unwrap();
    let a = h("k^S3");
    let q = quotient_by_hopf_ideal(&a, &delta_complement(&g, sub(&g, "A3"))).unwrap();
    let c = coadjoint_descends(&q).unwrap();
    assert!(c.is_coassociative() && c.is_counital());
    let q = quotient_by_hopf_ideal(&a, &delta_complement(&g, sub(&g, "C2"))).unwrap();
    assert!(matches!(
        coadjoint_descends(&q),
        Err(Error::DescentFailure(_))
    ));
    // ε: the coaction is x ↦ ε(x)1⊗1̄
    let q = quotient_by_hopf_ideal(&a, &delta_complement(&g, g.trivial())).unwrap();
    let c = coadjoint_descends(&q).unwrap();
    assert_eq!(c.images, vec![SparseVec::from_dense(a.unit())]);
}

#[test]
fn normality_matches_group_normality() {
    for name in ["S4", "D4", "Q8", "A4"] {
        let g = group(name).unwrap();
        let ka = h(&format!("k{name}"));
        let fa = h(&format!("k^{name}"));
        for k in g.subgroups() {
            let expect = g.is_normal_in(k, g.full());
            let r = normality(&ka, NormalityInput::Subalgebra(&group_span(&g, k))).unwrap();
            assert_eq!(r.is_normal(), expect);
            if let Some(w) = r.witness() {
                assert!(w.is_valid());
                assert_eq!(w.quot.dim(), g.order() / g.order_of(k));
            }
            let q = quotient_by_hopf_ideal(&fa, &delta_complement(&g, k)).unwrap();
            assert_eq!(
                normality(&fa, NormalityInput::Quotient(&q))
                    .unwrap()
                    .is_normal(),
                expect
            );
        }
    }
}

#[test]
fn non_normal_report_carries_witness() {
    let g = group("S3").unwrap();
    let a = h("kS3");
    let r = normality(
        &a,
        NormalityInput::Subalgebra(&group_span(&g, sub(&g, "C2"))),
    )
    .unwrap();
    match r {
        qlattice::duality::Normality::NotNormal(rep) => assert!(rep.ad_witness.is_some()),
        _ => panic!("k<(12)> reported normal"),
    }
    let r = normality(&a, NormalityInput::Subalgebra(&Subspace::full(6))).unwrap();
    assert_eq!(r.witness().unwrap().quot.dim(), 1);
}

#[test]
fn largest_cocommutative_of_function_algebras() {
    for name in GROUP_NAMES {
        let g = group(name).unwrap();
        let m = largest_cocommutative(&h(&format!("k^{name}"))).unwrap();
        assert_eq!(
            m.dim(),
            g.order() / g.order_of(g.commutator_subgroup()),
            "k^{name}"
        );
        assert_eq!(
            largest_cocommutative(&h(&format!("k{name}")))
                .unwrap()
                .dim(),
            g.order()
        );
    }
    assert_eq!(largest_cocommutative(&h("k^Q8")).unwrap().dim(), 4);
}

#[test]
fn largest_cocommutative_of_nonclassical_algebras() {
    let h4 = h("H4");
    assert_eq!(
        largest_cocommutative(&h4).unwrap(),
        span_labels(&h4, &["1", "g"])
    );
    let h8 = h("H8");
    let m = largest_cocommutative(&h8).unwrap();
    for x in m.basis_vectors() {
        let x = SparseVec::from_dense(x);
        let d = h8.comult_sparse(&x);
        let mut op = SparseVec::new();
        for (p, c) in d.iter() {
            op.add_term((p % 8) * 8 + p / 8, c);
        }
        assert_eq!(d, op);
    }
    assert!(m.dim() >= 4);
}

#[test]
fn ad_invariant_products_are_closed() {
    // B·A for A normal and B a subgroup algebra is again a subalgebra
    let g = group("S4").unwrap();
    let a = h("kS4");
    let v4 = group_span(&g, sub(&g, "V4"));
    assert!(ad_invariance(&a, &v4, AdSide::Right).invariant);
    for k in g.subgroups() {
        let b = group_span(&g, k);
        let vecs: Vec<Vec<Scalar>> = b
            .basis_vectors()
            .flat_map(|x| v4.basis_vectors().map(move |y| (x.to_vec(), y.to_vec())))
            .map(|(x, y)| a.mul(&x, &y))
            .collect();
        let prod = Subspace::from_vectors(24, vecs);
        assert!(classify(&a, &prod).subalgebra);
    }
}
