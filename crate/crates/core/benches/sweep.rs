use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tamelie::catalog::catalog_get;
use tamelie::sweep::{sweep, sweep_sequential};
use tamelie::Orientation;

fn random_structures(c: &mut Criterion) {
    let or = Orientation::standard(4);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for name in ["nil4", "sol3xR"] {
        let g = catalog_get(name).unwrap().algebra;
        for count in [8u64, 32] {
            let id = format!("{name}/{count}");
            group.bench_with_input(BenchmarkId::new("sequential", &id), &count, |b, &n| {
                b.iter(|| sweep_sequential(&g, &or, black_box(1), n))
            });
            // Without the `parallel` feature this measures the same driver twice.
            group.bench_with_input(BenchmarkId::new("parallel", &id), &count, |b, &n| {
                b.iter(|| sweep(&g, &or, black_box(1), n))
            });
        }
    }
    group.finish();
}

fn acceptance_suite(c: &mut Criterion) {
    use tamelie::acceptance::{run_criterion, Config};
    let cfg = Config {
        sweep_count: 10,
        structural_cases: 50,
        ..Config::default()
    };
    let mut group = c.benchmark_group("criteria");
    group.sample_size(10);
    for id in [6, 7, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(id), &id, |b, &id| {
            b.iter(|| run_criterion(id, &cfg))
        });
    }
    group.finish();
}

criterion_group!(benches, random_structures, acceptance_suite);
criterion_main!(benches);
