use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use flowup_bench::{c5, decreasing_chain, pq_graph};
use flowup_core::{
    build_spline_lattice, enumerate_splines, factorize, flow_up_basis, hermite_normal_form,
    minimum_generating_set, module_invariants, smith_normal_form, son_decreasing, ChainDirection,
    ChainLabels, DEFAULT_BUDGET,
};

fn normal_forms(c: &mut Criterion) {
    let g = pq_graph(6).unwrap();
    let gens = build_spline_lattice(&g).unwrap().generators().clone();
    c.bench_function("hnf/pq6", |b| b.iter(|| hermite_normal_form(black_box(&gens))));
    c.bench_function("snf/pq6", |b| b.iter(|| smith_normal_form(black_box(&gens))));
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("flow_up_basis");
    for n in [4usize, 6, 8] {
        let g = pq_graph(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| flow_up_basis(&build_spline_lattice(black_box(g)).unwrap()).unwrap())
        });
    }
    group.finish();
    let g = c5().unwrap();
    c.bench_function("rank/c5", |b| {
        b.iter(|| module_invariants(&build_spline_lattice(black_box(&g)).unwrap()).unwrap().rank)
    });
    c.bench_function("mingen/c5", |b| b.iter(|| minimum_generating_set(black_box(&g), false).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let g = c5().unwrap();
    c.bench_function("enumerate/c5", |b| b.iter(|| enumerate_splines(black_box(&g), DEFAULT_BUDGET).unwrap().len()));
}

fn constructions(c: &mut Criterion) {
    let (m, labels) = decreasing_chain(5);
    let ctx = factorize(m).unwrap();
    let chain = ChainLabels::new(labels, ChainDirection::Decreasing, &ctx).unwrap();
    c.bench_function("son_decreasing/k5", |b| b.iter(|| son_decreasing(5, black_box(&chain), &ctx).unwrap()));
}

criterion_group!(benches, normal_forms, lattice, enumeration, constructions);
criterion_main!(benches);
