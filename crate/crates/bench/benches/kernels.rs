use std::hint::black_box;

use bellgraph::bell::BellOperator;
use bellgraph::transform::walsh_hadamard;
use bellgraph::{bell_coefficients, canonicalize, lc_orbit, lhv_bound_with, Engine};
use bellgraph_bench::{scrambled, workload};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("walsh_hadamard");
    for bits in [10, 16, 20] {
        let data: Vec<i64> = (0..1i64 << bits).map(|i| (i * 7919) % 13 - 6).collect();
        group.bench_with_input(BenchmarkId::from_parameter(bits), &data, |b, data| {
            b.iter(|| {
                let mut v = data.clone();
                walsh_hadamard(&mut v);
                black_box(v)
            })
        });
    }
    group.finish();
}

fn coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("bell_coefficients");
    for n in [6, 9, 12] {
        let g = workload(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| bell_coefficients(black_box(g), 1).unwrap())
        });
    }
    group.finish();
}

fn lhv(c: &mut Criterion) {
    let mut group = c.benchmark_group("lhv_bound");
    group.sample_size(10);
    for n in [6, 9] {
        let g = workload(n);
        for (name, engine) in [("direct", Engine::Direct), ("transform", Engine::Transform)] {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| lhv_bound_with(black_box(g), 1, engine).unwrap())
            });
        }
    }
    let g = workload(6);
    group.bench_function("operator_build/6", |b| b.iter(|| BellOperator::new(black_box(&g), 1).unwrap()));
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonicalize");
    for n in [7, 10, 16] {
        let graphs: Vec<_> = (1..=32).map(|s| scrambled(n, s)).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(canonicalize).max())
        });
    }
    let g = scrambled(8, 3);
    group.bench_function("lc_orbit/8", |b| b.iter(|| lc_orbit(black_box(&g)).unwrap().len()));
    group.finish();
}

criterion_group!(benches, transform, coefficients, lhv, canonical);
criterion_main!(benches);
