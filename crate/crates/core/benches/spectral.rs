//! Rayleigh span-check throughput over growing sample batches. The sample
//! sweep is the data-parallel inner loop; rerun with
//! `--no-default-features` for the sequential baseline.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropeig::geneig::construct_all;
use tropeig::sampling::{random_matrix, span_samples, ScalarPool};
use tropeig::spectral::{max_cycle_mean, rayleigh_span_check};

fn bench_span_check(c: &mut Criterion) {
    let pool = ScalarPool::small_rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let a = random_matrix(&mut rng, 6, 6, &pool, 0.2);
    let pairs = construct_all(&a).unwrap();
    let mut group = c.benchmark_group("rayleigh_span_check");
    group.sample_size(20);
    for count in [200usize, 2000] {
        let samples = span_samples(&mut rng, count, pairs.len());
        group.bench_with_input(BenchmarkId::from_parameter(count), &samples, |b, samples| {
            b.iter(|| rayleigh_span_check(black_box(&a), &pairs, samples).unwrap())
        });
    }
    group.finish();
}

fn bench_cycle_mean(c: &mut Criterion) {
    let pool = ScalarPool::small_rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let a = random_matrix(&mut rng, 10, 10, &pool, 0.3);
    c.bench_function("max_cycle_mean/10", |b| {
        b.iter(|| max_cycle_mean(black_box(&a)).unwrap())
    });
}

criterion_group!(benches, bench_span_check, bench_cycle_mean);
criterion_main!(benches);
