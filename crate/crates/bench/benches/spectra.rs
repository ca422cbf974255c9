use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ng_bench::random_graph;
use ng_core::{adjacency_spectrum, run_battery};
use std::hint::black_box;

fn eigensolve(c: &mut Criterion) {
    let mut group = c.benchmark_group("adjacency_spectrum");
    for n in [16, 64, 128] {
        let g = random_graph(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| adjacency_spectrum(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn battery(c: &mut Criterion) {
    let g = random_graph(64, 2);
    c.bench_function("run_battery/n64_s5", |b| b.iter(|| run_battery(black_box(&g), 5).unwrap()));
}

criterion_group!(benches, eigensolve, battery);
criterion_main!(benches);
