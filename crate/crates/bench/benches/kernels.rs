//! Benchmarks for the hot exact-arithmetic kernels: algebra construction,
//! Weyl enumeration, Cayley matrices, and the full orbit pipeline.

use criterion::{criterion_group, criterion_main, Criterion};
use strataforge_core::chevalley::LieAlgebra;
use strataforge_core::orbits::EnumerationOptions;
use strataforge_core::roots::{RootSystem, WeylGroup};
use strataforge_core::{GradingDatum, Session};

fn bench_build(c: &mut Criterion) {
    c.bench_function("build_algebra_g2", |b| {
        b.iter(|| LieAlgebra::build(RootSystem::of_type("G2").unwrap()).unwrap())
    });
    c.bench_function("weyl_group_c3", |b| {
        let rs = RootSystem::of_type("C3").unwrap();
        b.iter(|| WeylGroup::generate(&rs))
    });
    c.bench_function("cayley_matrix_g2", |b| {
        let la = LieAlgebra::build(RootSystem::of_type("G2").unwrap()).unwrap();
        b.iter(|| la.cayley_matrix(0).unwrap())
    });
}

fn bench_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("carayol_orbits", |b| {
        b.iter(|| {
            let la = LieAlgebra::build(RootSystem::of_type("A2").unwrap()).unwrap();
            let g = GradingDatum::new(vec![1, 1]).unwrap();
            let s = Session::new(la, g, &EnumerationOptions::default()).unwrap();
            s.enumerate_orbits().unwrap()
        })
    });
    group.bench_function("psp4_siegel_orbits", |b| {
        b.iter(|| {
            let la = LieAlgebra::build(RootSystem::of_type("C2").unwrap()).unwrap();
            let g = GradingDatum::new(vec![0, 1]).unwrap();
            let s = Session::new(la, g, &EnumerationOptions::default()).unwrap();
            s.enumerate_orbits().unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_build, bench_pipeline);
criterion_main!(benches);
