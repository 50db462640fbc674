//! Geometric-eigenvalue machinery, the tropical numerical range, and
//! Rayleigh-quotient operations.
//!
//! The maximum cycle mean is computed exactly by Karp's dynamic program, run
//! per strongly connected component of the precedence digraph (edge i→j iff
//! a_ij is finite). A geometric eigenvector for the greatest eigenvalue comes
//! from a critical column of the Kleene star of the normalized matrix; both
//! serve as independent cross-checks for the algebraic spectrum.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geneig::{verify, GenEigenpair};
use crate::matrix::{TropMatrix, TropVector};
use crate::semiring::Scalar;

/// The tropical numerical range F_max(A) = [min_i a_ii, max_ij a_ij].
///
/// `lo` may be ε (some diagonal entry is ε), in which case the interval is
/// [-inf, hi]; the all-ε matrix degenerates to the single point {ε}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeInterval {
    lo: Scalar,
    hi: Scalar,
}

impl RangeInterval {
    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        &self.lo <= value && value <= &self.hi
    }
}

impl fmt::Display for RangeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// F_max(A) as the closed interval from the least diagonal entry to the
/// greatest entry overall.
pub fn numerical_range(a: &TropMatrix) -> Result<RangeInterval> {
    a.require_square()?;
    let n = a.nrows();
    let lo = (0..n).map(|i| a.entry(i, i)).min().expect("nonempty").clone();
    let hi = (0..n)
        .flat_map(|i| a.row(i))
        .max()
        .expect("nonempty")
        .clone();
    Ok(RangeInterval { lo, hi })
}

/// The Rayleigh quotient (x^T ⊗ A ⊗ x) ⊗ (x^T ⊗ x)^⊗-1 of a nonzero
/// vector; ε when the quadratic form is ε. Invariant under scaling of x.
pub fn rayleigh_quotient(a: &TropMatrix, x: &TropVector) -> Result<Scalar> {
    if !x.is_nonzero() {
        return Err(Error::ZeroVector);
    }
    let form = a.quadratic_form(x)?;
    let inv = x.self_inner().tinv().expect("nonzero vector");
    Ok(form.tmul(&inv))
}

/// Maximum over all directed cycles of (cycle weight)/(cycle length); ε when
/// the precedence digraph is acyclic. Karp's dynamic program per strongly
/// connected component, exact.
pub fn max_cycle_mean(a: &TropMatrix) -> Result<Scalar> {
    a.require_square()?;
    let mut best = Scalar::Epsilon;
    for component in strongly_connected_components(a) {
        if let Some(mean) = karp_within(a, &component) {
            best = best.tadd(&Scalar::Finite(mean));
        }
    }
    Ok(best)
}

/// Karp's formula max_v min_k (D_s(v) - D_k(v))/(s - k) inside one strongly
/// connected component; `None` when the component has no internal edge.
fn karp_within(a: &TropMatrix, nodes: &[usize]) -> Option<BigRational> {
    let s = nodes.len();
    let has_edge = nodes
        .iter()
        .any(|&i| nodes.iter().any(|&j| a.entry(i, j).is_finite()));
    if !has_edge {
        return None;
    }

    // d[k][v] = max weight of a walk with exactly k edges from nodes[0]
    let mut d = vec![vec![Scalar::Epsilon; s]; s + 1];
    d[0][0] = Scalar::from_int(0);
    for k in 1..=s {
        for (vi, &v) in nodes.iter().enumerate() {
            let mut acc = Scalar::Epsilon;
            for (ui, &u) in nodes.iter().enumerate() {
                acc = acc.tadd(&d[k - 1][ui].tmul(a.entry(u, v)));
            }
            d[k][vi] = acc;
        }
    }

    let mut best: Option<BigRational> = None;
    for (vi, walk_s) in d[s].iter().enumerate() {
        let Some(full) = walk_s.rational() else {
            continue;
        };
        let mut tightest: Option<BigRational> = None;
        for (k, row) in d.iter().enumerate().take(s) {
            if let Some(partial) = row[vi].rational() {
                let candidate = (full - partial) / BigInt::from(s - k);
                if tightest.as_ref().is_none_or(|t| candidate < *t) {
                    tightest = Some(candidate);
                }
            }
        }
        if let Some(t) = tightest {
            if best.as_ref().is_none_or(|b| t > *b) {
                best = Some(t);
            }
        }
    }
    best
}

/// Tarjan's algorithm over the precedence digraph.
fn strongly_connected_components(a: &TropMatrix) -> Vec<Vec<usize>> {
    struct Walk<'a> {
        a: &'a TropMatrix,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        components: Vec<Vec<usize>>,
    }

    impl Walk<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for w in 0..self.a.nrows() {
                if self.a.entry(v, w).is_epsilon() {
                    continue;
                }
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) => {
                        if self.on_stack[w] {
                            self.low[v] = self.low[v].min(iw);
                        }
                    }
                }
            }
            if self.low[v] == self.index[v].unwrap() {
                let mut component = Vec::new();
                loop {
                    let w = self.stack.pop().unwrap();
                    self.on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                self.components.push(component);
            }
        }
    }

    let n = a.nrows();
    let mut walk = Walk {
        a,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        components: Vec::new(),
    };
    for v in 0..n {
        if walk.index[v].is_none() {
            walk.visit(v);
        }
    }
    walk.components
}

/// A nonzero scaled x with A ⊗ x = λ ⊗ x for λ = max_cycle_mean(A), from a
/// critical column of the Kleene star of (-λ) ⊗ A. The equation is checked
/// exactly before returning.
pub fn geometric_eigenvector(a: &TropMatrix) -> Result<TropVector> {
    a.require_square()?;
    let lambda = max_cycle_mean(a)?;
    if lambda.is_epsilon() {
        return Err(Error::NoFiniteCycle);
    }
    let n = a.nrows();
    let normalized = a.scalar_mul(&lambda.tinv().expect("finite"));
    let mut star = TropMatrix::identity(n)?;
    let mut power = TropMatrix::identity(n)?;
    for _ in 1..n {
        power = power.matmul(&normalized)?;
        star = star.tadd(&power)?;
    }
    let closure = normalized.matmul(&star)?;
    let critical = (0..n)
        .find(|&i| closure.entry(i, i) == &Scalar::from_int(0))
        .ok_or(Error::InternalVerificationFailed)?;
    let column = TropVector::new((0..n).map(|i| star.entry(i, critical).clone()).collect())?;
    if a.apply(&column)? != column.scalar_mul(&lambda) {
        return Err(Error::InternalVerificationFailed);
    }
    column.scale()
}

/// Coefficients of a max-combination u = ⊕_i c_i ⊗ x_i over a family of
/// eigenvectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanSample {
    pub coefficients: Vec<Scalar>,
}

impl SpanSample {
    pub fn new(coefficients: Vec<Scalar>) -> Self {
        SpanSample { coefficients }
    }

    /// The sample that picks out x_index alone.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut coefficients = vec![Scalar::Epsilon; len];
        coefficients[index] = Scalar::from_int(0);
        SpanSample { coefficients }
    }

    pub fn combine(&self, vectors: &[&TropVector]) -> Result<TropVector> {
        max_combination(vectors, &self.coefficients)
    }
}

/// u = ⊕_i c_i ⊗ x_i; errors with ZeroVector when every coefficient is ε.
pub fn max_combination(vectors: &[&TropVector], coefficients: &[Scalar]) -> Result<TropVector> {
    if vectors.is_empty() || vectors.len() != coefficients.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for {} vectors",
            coefficients.len(),
            vectors.len()
        )));
    }
    let len = vectors[0].len();
    if vectors.iter().any(|v| v.len() != len) {
        return Err(Error::DimensionMismatch("span vectors have unequal lengths".into()));
    }
    let mut entries = vec![Scalar::Epsilon; len];
    for (c, x) in coefficients.iter().zip(vectors) {
        if c.is_epsilon() {
            continue;
        }
        for (e, xe) in entries.iter_mut().zip(x.entries()) {
            *e = e.tadd(&c.tmul(xe));
        }
    }
    let u = TropVector::new(entries)?;
    if !u.is_nonzero() {
        return Err(Error::ZeroVector);
    }
    Ok(u)
}

/// Outcome of a Rayleigh span check for λ_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayleighReport {
    /// The smallest eigenvalue of the supplied family.
    pub lambda_k: Scalar,
    /// Minimum Rayleigh quotient over the evaluated max-combinations.
    pub min_observed: Scalar,
    /// A sample attaining the minimum (the u = x_k witness when the minimum
    /// equals λ_k, since it is always evaluated first).
    pub witness: SpanSample,
    /// Whether every evaluated quotient was ≥ λ_k.
    pub all_geq_lambda_k: bool,
}

/// Evaluates the Rayleigh quotient of u = ⊕ c_i ⊗ x_i for every sample plus
/// the witness u = x_k, and reports the minimum and the lower-bound check.
///
/// `pairs` must hold verified, scaled generalized eigenpairs for
/// λ_k ≤ … ≤ λ_n in ascending order; each sample needs one coefficient per
/// pair and at least one finite coefficient.
pub fn rayleigh_span_check(
    a: &TropMatrix,
    pairs: &[GenEigenpair],
    samples: &[SpanSample],
) -> Result<RayleighReport> {
    a.require_square()?;
    if pairs.is_empty() {
        return Err(Error::PreconditionViolated("need at least one eigenpair".into()));
    }
    if pairs.windows(2).any(|w| w[0].lambda > w[1].lambda) {
        return Err(Error::PreconditionViolated(
            "eigenpairs must be sorted ascending by eigenvalue".into(),
        ));
    }
    for pair in pairs {
        if !verify(a, pair)? {
            return Err(Error::SpectrumMismatch(pair.lambda.clone()));
        }
        if pair.vector.max_norm()? != Scalar::from_int(0) {
            return Err(Error::PreconditionViolated("eigenvectors must be scaled".into()));
        }
    }
    if samples.is_empty() {
        return Err(Error::PreconditionViolated("need at least one sample".into()));
    }

    let vectors: Vec<&TropVector> = pairs.iter().map(|p| &p.vector).collect();
    let lambda_k = pairs[0].lambda.clone();

    let mut evaluated: Vec<SpanSample> = Vec::with_capacity(samples.len() + 1);
    evaluated.push(SpanSample::unit(pairs.len(), 0));
    evaluated.extend_from_slice(samples);

    let quotient_of = |sample: &SpanSample| -> Result<Scalar> {
        rayleigh_quotient(a, &sample.combine(&vectors)?)
    };
    #[cfg(feature = "parallel")]
    let quotients: Vec<Scalar> = evaluated
        .par_iter()
        .map(quotient_of)
        .collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let quotients: Vec<Scalar> = evaluated.iter().map(quotient_of).collect::<Result<_>>()?;

    let (witness_index, min_observed) = quotients
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.cmp(y))
        .map(|(i, q)| (i, q.clone()))
        .expect("at least the witness sample");
    let all_geq_lambda_k = quotients.iter().all(|q| q >= &lambda_k);

    Ok(RayleighReport {
        lambda_k,
        min_observed,
        witness: evaluated[witness_index].clone(),
        all_geq_lambda_k,
    })
}
