//! Seeded random instance generation for stress tests and span sampling.
//!
//! Everything draws from a `rand` generator supplied by the caller, so a
//! fixed seed reproduces the same instances on every platform and thread
//! count.

use rand::Rng;

use crate::matrix::{TropMatrix, TropVector};
use crate::poly::MaxPolynomial;
use crate::semiring::Scalar;
use crate::spectral::SpanSample;

/// ε probability used for span-check coefficients.
pub const SPAN_EPS_PROBABILITY: f64 = 0.25;

/// A finite set of finite scalar values drawn uniformly.
#[derive(Clone, Debug)]
pub struct ScalarPool {
    values: Vec<Scalar>,
}

impl ScalarPool {
    pub fn new(values: Vec<Scalar>) -> Self {
        assert!(!values.is_empty(), "pool must be nonempty");
        assert!(values.iter().all(Scalar::is_finite), "pool values must be finite");
        ScalarPool { values }
    }

    /// The integers lo..=hi.
    pub fn integers(lo: i64, hi: i64) -> Self {
        ScalarPool::new((lo..=hi).map(Scalar::from_int).collect())
    }

    /// Numerators -12..=12 over denominators 1, 2 and 4; small enough for
    /// fast exact arithmetic, rough enough to exercise ties and halvings.
    pub fn small_rationals() -> Self {
        let mut values = Vec::new();
        for denom in [1, 2, 4] {
            for numer in -12..=12 {
                values.push(Scalar::from_ratio(numer, denom));
            }
        }
        ScalarPool::new(values)
    }

    pub fn draw(&self, rng: &mut impl Rng) -> Scalar {
        self.values[rng.random_range(0..self.values.len())].clone()
    }

    /// ε with probability `eps_probability`, otherwise a pool draw.
    pub fn draw_with_eps(&self, rng: &mut impl Rng, eps_probability: f64) -> Scalar {
        if rng.random::<f64>() < eps_probability {
            Scalar::Epsilon
        } else {
            self.draw(rng)
        }
    }
}

/// The span-check coefficient set: integers in [-5, 5].
pub fn default_span_pool() -> ScalarPool {
    ScalarPool::integers(-5, 5)
}

/// `count` coefficient samples of width `width` from the default
/// distribution (integers in [-5, 5], ε with probability 1/4), redrawn until
/// each has a finite coefficient.
pub fn span_samples(rng: &mut impl Rng, count: usize, width: usize) -> Vec<SpanSample> {
    span_samples_with(rng, count, width, &default_span_pool(), SPAN_EPS_PROBABILITY)
}

pub fn span_samples_with(
    rng: &mut impl Rng,
    count: usize,
    width: usize,
    pool: &ScalarPool,
    eps_probability: f64,
) -> Vec<SpanSample> {
    assert!(width >= 1, "samples need at least one coefficient");
    (0..count)
        .map(|_| loop {
            let coefficients: Vec<Scalar> = (0..width)
                .map(|_| pool.draw_with_eps(rng, eps_probability))
                .collect();
            if coefficients.iter().any(Scalar::is_finite) {
                return SpanSample::new(coefficients);
            }
        })
        .collect()
}

/// A rows×cols matrix whose entries are ε with probability `eps_density`
/// and pool draws otherwise.
pub fn random_matrix(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    pool: &ScalarPool,
    eps_density: f64,
) -> TropMatrix {
    let grid = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| pool.draw_with_eps(rng, eps_density))
                .collect()
        })
        .collect();
    TropMatrix::from_rows(grid).expect("rows and cols are positive")
}

/// A nonzero vector with ε density `eps_density`; one entry is forced
/// finite when the draw comes out all ε.
pub fn random_vector(
    rng: &mut impl Rng,
    len: usize,
    pool: &ScalarPool,
    eps_density: f64,
) -> TropVector {
    let mut entries: Vec<Scalar> = (0..len)
        .map(|_| pool.draw_with_eps(rng, eps_density))
        .collect();
    if entries.iter().all(Scalar::is_epsilon) {
        let at = rng.random_range(0..len);
        entries[at] = pool.draw(rng);
    }
    TropVector::new(entries).expect("len is positive")
}

/// A polynomial with coefficients for exponents 0..=max_degree, ε density
/// `eps_density`, and at least one finite coefficient (its degree may be
/// lower after trailing-ε trimming).
pub fn random_polynomial(
    rng: &mut impl Rng,
    max_degree: usize,
    pool: &ScalarPool,
    eps_density: f64,
) -> MaxPolynomial {
    let mut coeffs: Vec<Scalar> = (0..=max_degree)
        .map(|_| pool.draw_with_eps(rng, eps_density))
        .collect();
    if coeffs.iter().all(Scalar::is_epsilon) {
        let at = rng.random_range(0..coeffs.len());
        coeffs[at] = pool.draw(rng);
    }
    MaxPolynomial::new(coeffs).expect("one finite coefficient")
}
