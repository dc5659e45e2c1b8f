use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperrigid::sweep::{contiguity_sweep, levelt_sweep, Execution};

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn contiguity(c: &mut Criterion) {
    let mut group = c.benchmark_group("contiguity_sweep");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| contiguity_sweep(exec, 1, 64, 2, 5).unwrap())
        });
    }
    group.finish();
}

fn levelt(c: &mut Criterion) {
    let mut group = c.benchmark_group("levelt_sweep");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| levelt_sweep(exec, 1, 64, 5, 4))
        });
    }
    group.finish();
}

criterion_group!(benches, contiguity, levelt);
criterion_main!(benches);
