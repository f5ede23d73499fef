use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use qlattice::corpus::{corpus_algebra, named_subgroup, realization};
use qlattice::hopfcore::{build_validate, grouplikes, Hopf};
use qlattice::isothms::zassenhaus;
use qlattice::lattice::{
    enumerate_subgroups, join, meet, modular_survey, subgroup_from_group, ModularChecker, Picture,
    QuantumSubgroup,
};
use qlattice::series::{find_composition_series, schreier_refine, validate_series};

fn algebra(name: &str) -> Hopf {
    Arc::new(corpus_algebra(name).unwrap())
}

fn named(name: &str, picture: Picture, sub: &str) -> QuantumSubgroup {
    let (g, r) = realization(name).unwrap();
    subgroup_from_group(
        &algebra(name),
        &g,
        r,
        picture,
        named_subgroup(&g, sub).unwrap(),
    )
    .unwrap()
}

fn axioms(c: &mut Criterion) {
    let raw = algebra("kS4").to_raw();
    c.bench_function("validate kS4", |b| {
        b.iter(|| build_validate(raw.clone()).unwrap())
    });
    let h8 = algebra("H8");
    c.bench_function("grouplikes H8", |b| b.iter(|| grouplikes(&h8)));
}

fn lattice(c: &mut Criterion) {
    for (name, picture) in [("kS4", Picture::Dqg), ("k^S4", Picture::Qg)] {
        let (a, d) = (named(name, picture, "A4"), named(name, picture, "D4"));
        c.bench_function(&format!("meet {name}"), |b| {
            b.iter(|| meet(&a, &d).unwrap())
        });
        c.bench_function(&format!("join {name}"), |b| {
            b.iter(|| join(&a, &d).unwrap())
        });
    }
    let h = algebra("kA4");
    let (g, r) = realization("kA4").unwrap();
    let subs = enumerate_subgroups(&h, Picture::Dqg, Some((&g, r))).unwrap();
    c.bench_function("modular survey kA4", |b| {
        b.iter(|| modular_survey(&ModularChecker::new(&h), &subs).unwrap())
    });
}

fn theorems(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorems");
    group.sample_size(10);
    for (name, picture) in [("kS4", Picture::Dqg), ("k^S4", Picture::Qg)] {
        let one = named(name, picture, "1");
        let (a, d) = (named(name, picture, "A4"), named(name, picture, "D4"));
        group.bench_function(format!("zassenhaus {name}"), |b| {
            b.iter(|| zassenhaus(&a, &one, &d, &one).unwrap())
        });
        let whole = named(name, picture, "G");
        let s1 = validate_series(&[whole.clone(), a.clone(), one.clone()]).unwrap();
        let s2 = validate_series(&[whole, named(name, picture, "V4"), one]).unwrap();
        group.bench_function(format!("schreier {name}"), |b| {
            b.iter(|| schreier_refine(&s1, &s2).unwrap())
        });
        let h = algebra(name);
        group.bench_function(format!("composition series {name}"), |b| {
            b.iter(|| find_composition_series(&h, picture).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, lattice, theorems);
criterion_main!(benches);
