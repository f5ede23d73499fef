mod common;

use common::*;
use proptest::prelude::*;
use qlattice::corpus::{FiniteGroup, Subset};
use qlattice::isothms::{second_iso_dqg, second_iso_qg, third_iso, zassenhaus};
use qlattice::lattice::{enumerate_subgroups, is_normal_in, Picture};

#[test]
fn second_iso_in_function_algebra_of_s3() {
    let r = realize("k^S3", Picture::Qg);
    let (k, hh) = (&r.subs[&named(&r.g, "A3")], &r.subs[&named(&r.g, "C2")]);
    let s = second_iso_qg(hh, k).unwrap();
    assert!(s.meet.is_trivial());
    assert!(s.generation && s.injective && s.surjective);
    assert_eq!((s.source.dim(), s.target.dim()), (2, 2));
    assert!(s.certificate.unwrap().verify());
    let whole = &r.subs[&r.g.full()];
    let s = second_iso_qg(whole, k).unwrap();
    assert!(s.map.matrix().is_identity());
}

#[test]
fn second_iso_without_generation() {
    let r = realize("k^C4", Picture::Qg);
    let c2 = &r.subs[&named(&r.g, "C2")];
    let s = second_iso_qg(c2, c2).unwrap();
    assert!(!s.generation && s.surjective && !s.injective);
    assert!(s.certificate.is_none());
    let r = realize("kC4", Picture::Dqg);
    let c2 = &r.subs[&named(&r.g, "C2")];
    let s = second_iso_dqg(c2, c2).unwrap();
    assert!(!s.generation && s.injective && !s.surjective);
}

#[test]
fn second_iso_in_group_algebra_of_s3() {
    let r = realize("kS3", Picture::Dqg);
    let s = second_iso_dqg(&r.subs[&named(&r.g, "C2")], &r.subs[&named(&r.g, "A3")]).unwrap();
    assert!(s.generation);
    assert_eq!((s.source.dim(), s.target.dim()), (2, 2));
    assert!(s.certificate.unwrap().verify());
    let s = second_iso_dqg(&r.subs[&r.g.full()], &r.subs[&named(&r.g, "A3")]).unwrap();
    assert!(s.certificate.is_some());
    // K must be normal
    assert!(second_iso_dqg(&r.subs[&named(&r.g, "A3")], &r.subs[&named(&r.g, "C2")]).is_err());
}

#[test]
fn second_iso_matches_product_formula_on_s4() {
    for (name, picture) in [("kS4", Picture::Dqg), ("k^S4", Picture::Qg)] {
        let r = realize(name, picture);
        let g = &r.g;
        for k in g.normal_subgroups() {
            for hh in g.subgroups() {
                let s = match picture {
                    Picture::Qg => second_iso_qg(&r.subs[&hh], &r.subs[&k]),
                    Picture::Dqg => second_iso_dqg(&r.subs[&hh], &r.subs[&k]),
                }
                .unwrap();
                let n = g.order_of(g.meet(hh, k));
                let generation = g.join(hh, k) == g.full();
                assert_eq!(s.generation, generation);
                let (h_n, g_k) = (g.order_of(hh) / n, g.order() / g.order_of(k));
                let dims = match picture {
                    Picture::Qg => (g_k, h_n),
                    Picture::Dqg => (h_n, g_k),
                };
                assert_eq!((s.source.dim(), s.target.dim()), dims);
                assert_eq!(s.certificate.is_some(), generation);
                if let Some(c) = &s.certificate {
                    assert!(c.verify());
                }
            }
        }
    }
}

#[test]
fn third_iso_examples() {
    for (name, picture) in [("k^S4", Picture::Qg), ("kS4", Picture::Dqg)] {
        let r = realize(name, picture);
        let (v4, a4) = (&r.subs[&named(&r.g, "V4")], &r.subs[&named(&r.g, "A4")]);
        let t = third_iso(v4, a4).unwrap();
        assert_eq!(t.double_quotient.dim(), 2);
        assert!(t.certificate.verify());
        let t = third_iso(v4, v4).unwrap();
        assert_eq!(t.double_quotient.dim(), 6);
        let t = third_iso(&r.subs[&r.g.trivial()], a4).unwrap();
        assert_eq!(t.double_quotient.dim(), 2);
        assert!(third_iso(a4, v4).is_err());
    }
}

#[test]
fn third_iso_on_all_normal_chains() {
    for (name, picture) in [
        ("k^S4", Picture::Qg),
        ("kS4", Picture::Dqg),
        ("k^Q8", Picture::Qg),
        ("kD4", Picture::Dqg),
    ] {
        let r = realize(name, picture);
        let normals = r.g.normal_subgroups();
        for &n in &normals {
            for &hh in &normals {
                if n & !hh != 0 {
                    continue;
                }
                let t = third_iso(&r.subs[&n], &r.subs[&hh]).unwrap();
                assert_eq!(t.double_quotient.dim(), r.g.order() / r.g.order_of(hh));
                assert!(t.certificate.verify());
            }
        }
    }
}

#[test]
fn butterfly_in_s4() {
    for (name, picture) in [("kS4", Picture::Dqg), ("k^S4", Picture::Qg)] {
        let r = realize(name, picture);
        let one = &r.subs[&r.g.trivial()];
        let a4 = &r.subs[&named(&r.g, "A4")];
        let d4 = &r.subs[&named(&r.g, "D4")];
        let z = zassenhaus(a4, one, d4, one).unwrap();
        assert_eq!((z.left.dim(), z.middle.dim(), z.right.dim()), (4, 4, 4));
        assert!(z.modular_identity && z.certificate.verify());
        let swapped = zassenhaus(d4, one, a4, one).unwrap();
        assert!(swapped
            .certificate
            .map()
            .matrix()
            .mul(z.certificate.map().matrix())
            .is_identity());
        let z = zassenhaus(a4, a4, d4, d4).unwrap();
        assert_eq!((z.left.dim(), z.right.dim()), (1, 1));
    }
}

#[test]
fn butterfly_rejects_non_normal_inner_subgroup() {
    let r = realize("kS4", Picture::Dqg);
    let s3 = &r.subs[&named(&r.g, "S3")];
    let t = &r.subs[&named(&r.g, "T")];
    let whole = &r.subs[&r.g.full()];
    assert!(zassenhaus(whole, s3, whole, t).is_err());
}

#[test]
fn butterfly_on_kac_paljutkin_lattice() {
    let a = h("H8");
    for picture in [Picture::Dqg, Picture::Qg] {
        let subs = enumerate_subgroups(&a, picture, None).unwrap();
        for x in &subs {
            for x1 in subs.iter().filter(|s| is_normal_in(s, x).unwrap()) {
                for y in &subs {
                    for y1 in subs.iter().filter(|s| is_normal_in(s, y).unwrap()) {
                        let z = zassenhaus(x, x1, y, y1).unwrap();
                        assert!(z.certificate.verify());
                    }
                }
            }
        }
    }
}

fn normal_pairs(g: &FiniteGroup) -> Vec<(Subset, Subset)> {
    let subs = g.subgroups();
    let mut out = Vec::new();
    for &a in &subs {
        for &n in &subs {
            if n & !a == 0 && g.is_normal_in(n, a) {
                out.push((a, n));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn butterfly_dimension_matches_group_oracle(i in 0usize..1000, j in 0usize..1000, dqg in any::<bool>()) {
        let (name, picture) = if dqg { ("kS4", Picture::Dqg) } else { ("k^S4", Picture::Qg) };
        let r = realize(name, picture);
        let pairs = normal_pairs(&r.g);
        let (a, a1) = pairs[i % pairs.len()];
        let (b, b1) = pairs[j % pairs.len()];
        let z = zassenhaus(&r.subs[&a], &r.subs[&a1], &r.subs[&b], &r.subs[&b1]).unwrap();
        prop_assert_eq!(z.left.dim(), r.g.zassenhaus_order(a, a1, b, b1));
        prop_assert!(z.certificate.verify());
    }
}
