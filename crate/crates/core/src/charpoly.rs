//! The tropical characteristic maxpolynomial and algebraic eigenvalues.
//!
//! The coefficient of x^⊗(n-k) is δ_k, the maximum weight of a permutation
//! of a k-element principal submatrix, with δ_0 = 0. Every δ_k is computed
//! exactly by enumerating the k-subsets; each subset's assignment problem is
//! solved by raw permutation enumeration up to 8 rows and by an exact
//! Hungarian method above that. A structurally different oracle recomputes
//! the whole table from the n! permutations of the full matrix, classifying
//! each by how many diagonal positions take the indeterminate.
//!
//! With the `parallel` feature the subset sweep runs on rayon; the result is
//! identical either way because coefficients combine by ⊕ alone.

mod assignment;

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::poly::{MaxPolynomial, RootMultiset};
use crate::semiring::Scalar;

/// Default size cap for the subset enumeration.
pub const CHARPOLY_SIZE_CAP: usize = 12;
/// Default size cap for the factorial oracle.
pub const ORACLE_SIZE_CAP: usize = 9;
/// Largest assignment block enumerated permutation by permutation.
const PERMUTATION_LIMIT: usize = 8;

/// Characteristic coefficients of a square matrix, capped at
/// [`CHARPOLY_SIZE_CAP`].
pub fn char_coefficients(a: &TropMatrix) -> Result<MaxPolynomial> {
    char_coefficients_with_cap(a, CHARPOLY_SIZE_CAP)
}

/// Characteristic coefficients with an explicit size cap. Runs on rayon when
/// the `parallel` feature is enabled, sequentially otherwise.
pub fn char_coefficients_with_cap(a: &TropMatrix, cap: usize) -> Result<MaxPolynomial> {
    #[cfg(feature = "parallel")]
    {
        char_coefficients_parallel(a, cap)
    }
    #[cfg(not(feature = "parallel"))]
    {
        char_coefficients_serial(a, cap)
    }
}

/// Single-threaded coefficient computation; the fallback used when the
/// `parallel` feature is disabled, kept public as a benchmark baseline.
pub fn char_coefficients_serial(a: &TropMatrix, cap: usize) -> Result<MaxPolynomial> {
    let n = checked_size(a, cap)?;
    let mut deltas = vec![Scalar::Epsilon; n + 1];
    for subset in subsets(n) {
        let weight = best_assignment(a, &subset);
        deltas[subset.len()] = deltas[subset.len()].tadd(&weight);
    }
    deltas_to_polynomial(n, deltas)
}

/// Rayon-parallel coefficient computation over the subset sweep.
#[cfg(feature = "parallel")]
pub fn char_coefficients_parallel(a: &TropMatrix, cap: usize) -> Result<MaxPolynomial> {
    let n = checked_size(a, cap)?;
    let subsets = subsets(n);
    let deltas = subsets
        .par_iter()
        .fold(
            || vec![Scalar::Epsilon; n + 1],
            |mut acc, subset| {
                let weight = best_assignment(a, subset);
                acc[subset.len()] = acc[subset.len()].tadd(&weight);
                acc
            },
        )
        .reduce(
            || vec![Scalar::Epsilon; n + 1],
            |mut left, right| {
                for (l, r) in left.iter_mut().zip(right) {
                    *l = l.tadd(&r);
                }
                left
            },
        );
    deltas_to_polynomial(n, deltas)
}

/// Independent oracle with the same output contract as
/// [`char_coefficients`], capped at [`ORACLE_SIZE_CAP`].
pub fn char_coefficients_oracle(a: &TropMatrix) -> Result<MaxPolynomial> {
    char_coefficients_oracle_with_cap(a, ORACLE_SIZE_CAP)
}

/// Factorial-enumeration oracle: walks all n! permutations of [n] once. For
/// a permutation with fixed-point set F and finite off-diagonal weight w,
/// the coefficient of x^⊗t receives w plus the sum of the |F| - t largest
/// diagonal values over F (every subset choice of which fixed points take
/// the indeterminate reduces to that sum).
pub fn char_coefficients_oracle_with_cap(a: &TropMatrix, cap: usize) -> Result<MaxPolynomial> {
    let n = checked_size(a, cap)?;
    let mut coeffs = vec![Scalar::Epsilon; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, &mut |sigma| {
        let mut off = Some(BigRational::zero());
        let mut fixed: Vec<&Scalar> = Vec::new();
        for (i, &j) in sigma.iter().enumerate() {
            if i == j {
                fixed.push(a.entry(i, j));
            } else if let Some(acc) = off.as_mut() {
                match a.entry(i, j).rational() {
                    Some(w) => *acc += w,
                    None => off = None,
                }
            }
        }
        let Some(off) = off else { return };
        fixed.sort_by(|x, y| y.cmp(x));
        let f = fixed.len();
        let mut partial = Scalar::Finite(off);
        coeffs[f] = coeffs[f].tadd(&partial);
        for (kept, value) in fixed.iter().enumerate() {
            partial = partial.tmul(value);
            let exponent = f - (kept + 1);
            coeffs[exponent] = coeffs[exponent].tadd(&partial);
        }
    });
    MaxPolynomial::new(coeffs)
}

/// The algebraic eigenvalues λ_1 ≤ … ≤ λ_n: the tropical roots of the
/// characteristic maxpolynomial, with multiplicity.
pub fn algebraic_eigenvalues(a: &TropMatrix) -> Result<Spectrum> {
    algebraic_eigenvalues_with_cap(a, CHARPOLY_SIZE_CAP)
}

pub fn algebraic_eigenvalues_with_cap(a: &TropMatrix, cap: usize) -> Result<Spectrum> {
    let p = char_coefficients_with_cap(a, cap)?;
    let roots = p.roots();
    debug_assert_eq!(roots.total_multiplicity(), a.nrows());
    Ok(Spectrum {
        roots,
        size: a.nrows(),
    })
}

/// The n algebraic eigenvalues of an n×n matrix, sorted ascending with ε
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    roots: RootMultiset,
    size: usize,
}

impl Spectrum {
    /// λ_1 ≤ … ≤ λ_n with multiplicity.
    pub fn eigenvalues(&self) -> Vec<Scalar> {
        self.roots.expanded()
    }

    /// Distinct eigenvalues with multiplicities.
    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The greatest eigenvalue λ_n.
    pub fn max(&self) -> &Scalar {
        self.roots.max()
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        self.roots.contains(value)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.eigenvalues().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn checked_size(a: &TropMatrix, cap: usize) -> Result<usize> {
    a.require_square()?;
    let n = a.nrows();
    if n > cap {
        return Err(Error::SizeLimitExceeded { n, cap });
    }
    Ok(n)
}

fn deltas_to_polynomial(n: usize, deltas: Vec<Scalar>) -> Result<MaxPolynomial> {
    let mut coeffs = vec![Scalar::Epsilon; n + 1];
    for (k, delta) in deltas.into_iter().enumerate() {
        coeffs[n - k] = delta;
    }
    // c_n = δ_0 = 0, so the polynomial always has a finite coefficient
    MaxPolynomial::new(coeffs)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
    }
    out
}

fn best_assignment(a: &TropMatrix, subset: &[usize]) -> Scalar {
    if subset.len() <= PERMUTATION_LIMIT {
        best_assignment_enumerated(a, subset)
    } else {
        assignment::max_assignment(a, subset)
    }
}

fn best_assignment_enumerated(a: &TropMatrix, rows: &[usize]) -> Scalar {
    let mut cols: Vec<usize> = rows.to_vec();
    let mut best = Scalar::Epsilon;
    for_each_permutation(&mut cols, &mut |cols| {
        let mut sum = BigRational::zero();
        for (&r, &c) in rows.iter().zip(cols) {
            match a.entry(r, c).rational() {
                Some(w) => sum += w,
                None => return,
            }
        }
        let weight = Scalar::Finite(sum);
        if weight > best {
            best = weight;
        }
    });
    best
}

/// Heap's algorithm; visits every permutation of `items` exactly once.
fn for_each_permutation<F: FnMut(&[usize])>(items: &mut [usize], visit: &mut F) {
    let n = items.len();
    visit(items);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
