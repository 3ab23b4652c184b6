use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ltc_bench::{construction2_host, dense_random_host};
use ltc_core::covering::{cover_report, fast_witness_via_link, find_c6_through};
use ltc_core::search::{compute_threshold, verify_min_deg2_implies_pattern};
use ltc_core::{SearchMode, ThresholdKind};

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_c6_through");
    for n in [24, 60, 120] {
        let g = construction2_host(n);
        group.bench_with_input(BenchmarkId::new("construction2_apex", n), &g, |b, g| {
            b.iter(|| find_c6_through(black_box(g), 0))
        });
    }
    for n in [12, 20] {
        let g = dense_random_host(n, 1);
        group.bench_with_input(BenchmarkId::new("dense_random", n), &g, |b, g| {
            b.iter(|| find_c6_through(black_box(g), 0))
        });
    }
    group.finish();
}

fn fast_path(c: &mut Criterion) {
    let g = dense_random_host(16, 2);
    c.bench_function("fast_witness_via_link/dense_16", |b| {
        b.iter(|| fast_witness_via_link(black_box(&g), 0))
    });
    c.bench_function("cover_report/dense_16", |b| {
        b.iter(|| cover_report(black_box(&g)))
    });
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("c2_exhaustive_n5", |b| {
        b.iter(|| compute_threshold(ThresholdKind::Codegree, 5, SearchMode::Exhaustive, 1))
    });
    group.bench_function("c1_pruned_n7", |b| {
        b.iter(|| compute_threshold(ThresholdKind::Degree, 7, SearchMode::Pruned, 1))
    });
    group.bench_function("min_deg2_pattern_m6", |b| {
        b.iter(|| verify_min_deg2_implies_pattern(6))
    });
    group.finish();
}

criterion_group!(benches, oracle, fast_path, searches);
criterion_main!(benches);
