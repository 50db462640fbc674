//! Formal max-polynomials, evaluation, and tropical roots.
//!
//! A polynomial is a coefficient sequence indexed by exponent. Its tropical
//! roots are read off the upper concave hull of the points (exponent,
//! coefficient): each hull edge contributes the root (c_left - c_right)/gap
//! with multiplicity equal to its horizontal span, and a missing constant
//! block contributes the root ε. An independent oracle recovers the finite
//! roots by enumerating all pairwise monomial crossings and testing where at
//! least two monomials attain the maximum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::semiring::Scalar;

/// A formal tropical polynomial with at least one finite coefficient.
///
/// Trailing ε coefficients are trimmed on construction, so the last stored
/// coefficient is finite and its index is the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxPolynomial {
    coeffs: Vec<Scalar>,
}

impl MaxPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Result<Self> {
        while coeffs.last().is_some_and(Scalar::is_epsilon) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::AllEpsilon);
        }
        Ok(MaxPolynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^⊗k; ε above the degree.
    pub fn coefficient(&self, k: usize) -> &Scalar {
        self.coeffs.get(k).unwrap_or(&Scalar::Epsilon)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// The associated polynomial function max_k (c_k + k·t); at t = ε every
    /// monomial of positive degree vanishes and the constant term survives.
    pub fn eval(&self, t: &Scalar) -> Scalar {
        if t.is_epsilon() {
            return self.coefficient(0).clone();
        }
        let mut acc = Scalar::Epsilon;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_finite() {
                acc = acc.tadd(&c.tmul(&t.tpow(k)));
            }
        }
        acc
    }

    /// All tropical roots with multiplicity, via the Newton polygon.
    ///
    /// Hull vertices k_0 < … < k_m over the finite coefficient points give
    /// the root ε with multiplicity k_0 (when k_0 > 0) and, per edge, the
    /// root (c_{k_i} - c_{k_{i+1}})/(k_{i+1} - k_i) with multiplicity equal
    /// to the gap. Collinear coefficient points merge into a single edge.
    pub fn roots(&self) -> RootMultiset {
        let points: Vec<(usize, &BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.rational().map(|r| (k, r)))
            .collect();
        let hull = upper_hull(&points);

        let mut pairs = Vec::new();
        let first = hull[0].0;
        if first > 0 {
            pairs.push((Scalar::Epsilon, first));
        }
        for window in hull.windows(2) {
            let (ka, ca) = window[0];
            let (kb, cb) = window[1];
            let gap = kb - ka;
            let value = (ca - cb) / BigInt::from(gap);
            pairs.push((Scalar::Finite(value), gap));
        }
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert_eq!(pairs.iter().map(|(_, m)| m).sum::<usize>(), self.degree());
        RootMultiset { pairs }
    }

    /// JSON form: an array of scalar tokens indexed by exponent.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let cells = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an array".into()))?;
        let coeffs = cells
            .iter()
            .map(|v| match v {
                serde_json::Value::Null => Ok(Scalar::Epsilon),
                serde_json::Value::String(s) => s.parse(),
                serde_json::Value::Number(n) => n.to_string().parse(),
                other => Err(Error::Parse(format!("invalid scalar token {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MaxPolynomial::new(coeffs)
    }

    pub fn to_json_string(&self) -> String {
        let tokens: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::json!(tokens).to_string()
    }
}

impl fmt::Display for MaxPolynomial {
    /// The coefficient list "c_0, …, c_n".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Upper concave hull of points with strictly increasing integer x. Interior
/// collinear points are dropped so every kept vertex is a strict corner.
fn upper_hull<'a>(points: &[(usize, &'a BigRational)]) -> Vec<(usize, &'a BigRational)> {
    let mut hull: Vec<(usize, &BigRational)> = Vec::new();
    for &(x, y) in points {
        while hull.len() >= 2 {
            let (xa, ya) = hull[hull.len() - 2];
            let (xb, yb) = hull[hull.len() - 1];
            // keep b only if it lies strictly above the segment a -> p
            let lhs = (yb - ya) * BigInt::from(x - xa);
            let rhs = (y - ya) * BigInt::from(xb - xa);
            if lhs > rhs {
                break;
            }
            hull.pop();
        }
        hull.push((x, y));
    }
    hull
}

/// Tropical roots with multiplicities, sorted ascending with ε first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    pairs: Vec<(Scalar, usize)>,
}

impl RootMultiset {
    pub fn pairs(&self) -> &[(Scalar, usize)] {
        &self.pairs
    }

    /// Every root repeated by its multiplicity, ascending.
    pub fn expanded(&self) -> Vec<Scalar> {
        self.pairs
            .iter()
            .flat_map(|(root, m)| std::iter::repeat_n(root.clone(), *m))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    /// The distinct finite root values, ascending.
    pub fn finite_values(&self) -> Vec<Scalar> {
        self.pairs
            .iter()
            .filter(|(root, _)| root.is_finite())
            .map(|(root, _)| root.clone())
            .collect()
    }

    pub fn contains(&self, value: &Scalar) -> bool {
        self.pairs.iter().any(|(root, _)| root == value)
    }

    pub fn max(&self) -> &Scalar {
        &self.pairs.last().expect("nonempty multiset").0
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Independent root oracle: the set of finite t where at least two monomials
/// attain eval(P, t), found by testing every pairwise crossing
/// (c_i - c_j)/(j - i). Exact, so it is usable as a reference for
/// [`MaxPolynomial::roots`]; multiplicities are not refined.
pub fn roots_oracle(p: &MaxPolynomial) -> Vec<Scalar> {
    let finite: Vec<(usize, &BigRational)> = p
        .coefficients()
        .iter()
        .enumerate()
        .filter_map(|(k, c)| c.rational().map(|r| (k, r)))
        .collect();
    let mut candidates = BTreeSet::new();
    for (a, &(i, ci)) in finite.iter().enumerate() {
        for &(j, cj) in &finite[a + 1..] {
            candidates.insert(Scalar::Finite((ci - cj) / BigInt::from(j - i)));
        }
    }
    candidates
        .into_iter()
        .filter(|t| attainment_count(p, t) >= 2)
        .collect()
}

/// Grid fallback for the oracle: scans t = lo, lo + step, … ≤ hi and keeps
/// the points where two monomials tie. Only finds roots lying exactly on the
/// grid; [`roots_oracle`] is exact and preferred.
pub fn roots_oracle_grid(
    p: &MaxPolynomial,
    grid_lo: &Scalar,
    grid_hi: &Scalar,
    step: &Scalar,
) -> Result<Vec<Scalar>> {
    let (Some(lo), Some(hi), Some(dt)) = (grid_lo.rational(), grid_hi.rational(), step.rational())
    else {
        return Err(Error::PreconditionViolated("grid bounds and step must be finite".into()));
    };
    if dt <= &BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::PreconditionViolated("grid step must be positive".into()));
    }
    let mut found = Vec::new();
    let mut t = lo.clone();
    while &t <= hi {
        let point = Scalar::Finite(t.clone());
        if attainment_count(p, &point) >= 2 {
            found.push(point);
        }
        t += dt;
    }
    Ok(found)
}

/// How many monomials attain eval(P, t) at a finite t.
fn attainment_count(p: &MaxPolynomial, t: &Scalar) -> usize {
    let value = p.eval(t);
    if value.is_epsilon() {
        return 0;
    }
    p.coefficients()
        .iter()
        .enumerate()
        .filter(|(k, c)| c.is_finite() && c.tmul(&t.tpow(*k)) == value)
        .count()
}
