use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use qtau_bench::benchmark_algebras;
use qtau_core::decompose::decompose;
use qtau_core::homology::tau;
use qtau_core::rep::{direct_sum, injective};
use qtau_core::tilting::{TauTilt, DEFAULT_NODE_CAP};

fn hasse(c: &mut Criterion) {
    let mut group = c.benchmark_group("hasse");
    group.sample_size(20);
    for (name, alg) in benchmark_algebras() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &alg, |b, alg| {
            b.iter(|| TauTilt::new(alg).hasse(DEFAULT_NODE_CAP).unwrap())
        });
    }
    group.finish();
}

fn translate(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau");
    for (name, alg) in benchmark_algebras() {
        let injectives: Vec<_> = (0..alg.vertex_count()).map(|v| injective(&alg, v)).collect();
        group.bench_function(BenchmarkId::new("injectives", name), |b| {
            b.iter(|| injectives.iter().map(|m| tau(&alg, black_box(m)).total_dim()).sum::<usize>())
        });
    }
    group.finish();
}

fn split(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for (name, alg) in benchmark_algebras() {
        let parts: Vec<_> = (0..alg.vertex_count()).map(|v| injective(&alg, v)).collect();
        let sum = direct_sum(&parts);
        group.bench_function(BenchmarkId::new("sum_of_injectives", name), |b| {
            b.iter(|| decompose(&alg, black_box(&sum)).count())
        });
    }
    group.finish();
}

criterion_group!(benches, hasse, translate, split);
criterion_main!(benches);
