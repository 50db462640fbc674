//! Characteristic-polynomial throughput: the rayon subset sweep against the
//! sequential fallback, over growing matrix sizes.
//!
//! Build with `--no-default-features` to measure the pure sequential crate;
//! with the default `parallel` feature this suite reports both paths side by
//! side.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropeig::charpoly::{char_coefficients_serial, CHARPOLY_SIZE_CAP};
use tropeig::sampling::{random_matrix, ScalarPool};

#[cfg(feature = "parallel")]
use tropeig::charpoly::char_coefficients_parallel;

fn bench_char_coefficients(c: &mut Criterion) {
    let pool = ScalarPool::small_rationals();
    let mut group = c.benchmark_group("char_coefficients");
    group.sample_size(10);
    for n in [5usize, 7, 8] {
        let mut rng = ChaCha8Rng::seed_from_u64(2024 + n as u64);
        let a = random_matrix(&mut rng, n, n, &pool, 0.2);
        group.bench_with_input(BenchmarkId::new("serial", n), &a, |b, a| {
            b.iter(|| char_coefficients_serial(black_box(a), CHARPOLY_SIZE_CAP).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &a, |b, a| {
            b.iter(|| char_coefficients_parallel(black_box(a), CHARPOLY_SIZE_CAP).unwrap())
        });
    }
    group.finish();
}

fn bench_eigenvalues(c: &mut Criterion) {
    let pool = ScalarPool::small_rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = random_matrix(&mut rng, 7, 7, &pool, 0.3);
    c.bench_function("algebraic_eigenvalues/7", |b| {
        b.iter(|| tropeig::charpoly::algebraic_eigenvalues(black_box(&a)).unwrap())
    });
}

criterion_group!(benches, bench_char_coefficients, bench_eigenvalues);
criterion_main!(benches);
