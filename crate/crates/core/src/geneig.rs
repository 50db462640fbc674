//! Explicit construction of generalized tropical eigenvectors.
//!
//! For every algebraic eigenvalue λ of A there is a nonzero x with
//! x^T ⊗ A ⊗ x = λ ⊗ x^T ⊗ x, and one can be written down directly from at
//! most two entries of the matrix. Which formula applies depends on how the
//! diagonal compares with λ:
//!
//! - all a_ii ≤ λ: pick a_pq ≥ λ and support x on {p, q} with the larger of
//!   a_pq, a_qp deciding the orientation (`construct_leq`);
//! - some a_qq ≥ λ: anchor x_p = 0 at a least diagonal entry and solve for
//!   x_q from either the off-diagonal pair or (λ - a_qq)/2
//!   (`construct_second`);
//! - λ = ε: a unit vector at an ε diagonal entry works.
//!
//! Every constructed pair re-checks its defining equation before being
//! returned, and the trace records which branch fired with which indices.

use std::fmt;

use crate::charpoly::{algebraic_eigenvalues_with_cap, CHARPOLY_SIZE_CAP};
use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::semiring::Scalar;

/// Which construction produced a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionCase {
    /// All diagonal ≤ λ, a_pq ≥ λ and a_pq ≥ a_qp.
    LeqCase1,
    /// All diagonal ≤ λ, a_pq ≥ λ and a_qp > a_pq.
    LeqCase2,
    /// a_qq ≥ λ and λ + a_qq ≤ 2·max(a_pq, a_qp).
    SecondCase1,
    /// a_qq ≥ λ and λ + a_qq > 2·max(a_pq, a_qp).
    SecondCase2,
    /// λ = ε; unit vector at an ε diagonal entry.
    EpsilonCase,
}

impl ConstructionCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionCase::LeqCase1 => "LEQ_CASE1",
            ConstructionCase::LeqCase2 => "LEQ_CASE2",
            ConstructionCase::SecondCase1 => "SECOND_CASE1",
            ConstructionCase::SecondCase2 => "SECOND_CASE2",
            ConstructionCase::EpsilonCase => "EPSILON_CASE",
        }
    }
}

impl fmt::Display for ConstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Construction record: the branch and the (0-based) anchor indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub case: ConstructionCase,
    pub p: usize,
    pub q: usize,
}

/// A certified pair: quadratic_form(A, vector) = λ ⊗ vector^T ⊗ vector, with
/// the vector scaled (max-norm 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenEigenpair {
    pub lambda: Scalar,
    pub vector: TropVector,
    pub trace: ConstructionTrace,
}

/// True iff quadratic_form(A, x) equals λ ⊗ x^T ⊗ x exactly.
pub fn verify_parts(a: &TropMatrix, lambda: &Scalar, x: &TropVector) -> Result<bool> {
    if !x.is_nonzero() {
        return Err(Error::ZeroVector);
    }
    Ok(a.quadratic_form(x)? == lambda.tmul(&x.self_inner()))
}

/// [`verify_parts`] on a packaged pair.
pub fn verify(a: &TropMatrix, pair: &GenEigenpair) -> Result<bool> {
    verify_parts(a, &pair.lambda, &pair.vector)
}

/// Construction for the case a_ii ≤ λ for all i, anchored at an entry
/// a_pq ≥ λ: x_p = 0 and x_q = λ - a_pq when a_pq ≥ a_qp, mirrored
/// otherwise.
pub fn construct_leq(a: &TropMatrix, lambda: &Scalar, p: usize, q: usize) -> Result<GenEigenpair> {
    let n = checked_indices(a, p, q)?;
    if lambda.is_epsilon() {
        return Err(Error::PreconditionViolated("λ must be finite".into()));
    }
    if let Some(i) = (0..n).find(|&i| a.entry(i, i) > lambda) {
        return Err(Error::PreconditionViolated(format!(
            "diagonal entry a_{}{} = {} exceeds λ = {lambda}",
            i + 1,
            i + 1,
            a.entry(i, i)
        )));
    }
    let apq = a.entry(p, q);
    let aqp = a.entry(q, p);
    if apq < lambda {
        return Err(Error::PreconditionViolated(format!(
            "a_{}{} = {apq} is below λ = {lambda}",
            p + 1,
            q + 1
        )));
    }
    let mut entries = vec![Scalar::Epsilon; n];
    let case = if apq >= aqp {
        entries[q] = lambda.tmul(&apq.tinv().expect("a_pq ≥ finite λ"));
        entries[p] = Scalar::from_int(0);
        ConstructionCase::LeqCase1
    } else {
        entries[p] = lambda.tmul(&aqp.tinv().expect("a_qp > a_pq ≥ finite λ"));
        entries[q] = Scalar::from_int(0);
        ConstructionCase::LeqCase2
    };
    certify(a, lambda.clone(), entries, ConstructionTrace { case, p, q })
}

/// Construction for the case a_qq ≥ λ with p a least diagonal index:
/// x_p = 0 and x_q = λ - max(a_pq, a_qp), or x_q = (λ - a_qq)/2 when the
/// off-diagonal pair is too small.
pub fn construct_second(
    a: &TropMatrix,
    lambda: &Scalar,
    p: usize,
    q: usize,
) -> Result<GenEigenpair> {
    let n = checked_indices(a, p, q)?;
    if lambda.is_epsilon() {
        return Err(Error::PreconditionViolated("λ must be finite".into()));
    }
    let aqq = a.entry(q, q);
    if aqq < lambda {
        return Err(Error::PreconditionViolated(format!(
            "a_{}{} = {aqq} is below λ = {lambda}",
            q + 1,
            q + 1
        )));
    }
    let app = a.entry(p, p);
    if (0..n).any(|i| a.entry(i, i) < app) {
        return Err(Error::PreconditionViolated(format!(
            "a_{}{} = {app} is not the least diagonal entry",
            p + 1,
            p + 1
        )));
    }
    if app > lambda {
        return Err(Error::PreconditionViolated(format!(
            "λ = {lambda} is below the least diagonal entry {app}"
        )));
    }
    let pair_max = a.entry(p, q).tadd(a.entry(q, p));
    let mut entries = vec![Scalar::Epsilon; n];
    let case = if lambda.tmul(aqq) <= pair_max.tpow(2) {
        entries[q] = lambda.tmul(&pair_max.tinv().expect("2·max ≥ λ + a_qq is finite"));
        ConstructionCase::SecondCase1
    } else {
        entries[q] = lambda.tmul(&aqq.tinv().expect("a_qq ≥ finite λ")).half();
        ConstructionCase::SecondCase2
    };
    entries[p] = Scalar::from_int(0);
    certify(a, lambda.clone(), entries, ConstructionTrace { case, p, q })
}

/// A generalized eigenvector for an algebraic eigenvalue λ of A, with the
/// branch chosen by the diagonal: some a_qq ≥ λ routes to
/// [`construct_second`] (least q, least argmin-diagonal p), otherwise the
/// lexicographically first a_pq ≥ λ routes to [`construct_leq`]; λ = ε gets
/// a unit vector at an ε diagonal entry. Ties break to the smallest index
/// so the result is canonical.
pub fn construct(a: &TropMatrix, lambda: &Scalar) -> Result<GenEigenpair> {
    construct_with_cap(a, lambda, CHARPOLY_SIZE_CAP)
}

pub fn construct_with_cap(a: &TropMatrix, lambda: &Scalar, cap: usize) -> Result<GenEigenpair> {
    let spectrum = algebraic_eigenvalues_with_cap(a, cap)?;
    if !spectrum.contains(lambda) {
        return Err(Error::NotAnEigenvalue(lambda.clone()));
    }
    dispatch(a, lambda)
}

/// One pair per spectrum entry, ascending; repeated eigenvalues share the
/// one canonical vector for their value.
pub fn construct_all(a: &TropMatrix) -> Result<Vec<GenEigenpair>> {
    construct_all_with_cap(a, CHARPOLY_SIZE_CAP)
}

pub fn construct_all_with_cap(a: &TropMatrix, cap: usize) -> Result<Vec<GenEigenpair>> {
    let spectrum = algebraic_eigenvalues_with_cap(a, cap)?;
    let mut pairs = Vec::with_capacity(spectrum.len());
    for (value, multiplicity) in spectrum.roots().pairs() {
        let pair = dispatch(a, value)?;
        for _ in 1..*multiplicity {
            pairs.push(pair.clone());
        }
        pairs.push(pair);
    }
    Ok(pairs)
}

fn dispatch(a: &TropMatrix, lambda: &Scalar) -> Result<GenEigenpair> {
    let n = a.nrows();
    if lambda.is_epsilon() {
        // λ = ε forces min a_ii = ε by the range containment
        let p = (0..n)
            .find(|&i| a.entry(i, i).is_epsilon())
            .ok_or(Error::InternalVerificationFailed)?;
        let entries = {
            let mut e = vec![Scalar::Epsilon; n];
            e[p] = Scalar::from_int(0);
            e
        };
        let trace = ConstructionTrace {
            case: ConstructionCase::EpsilonCase,
            p,
            q: p,
        };
        return certify(a, Scalar::Epsilon, entries, trace);
    }
    if let Some(q) = (0..n).find(|&i| a.entry(i, i) >= lambda) {
        let p = (0..n).min_by_key(|&i| a.entry(i, i)).expect("nonempty");
        return construct_second(a, lambda, p, q);
    }
    // all a_ii < λ; an entry a_pq ≥ λ exists because λ lies in the range
    let anchor = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .find(|&(p, q)| a.entry(p, q) >= lambda)
        .ok_or(Error::InternalVerificationFailed)?;
    construct_leq(a, lambda, anchor.0, anchor.1)
}

fn checked_indices(a: &TropMatrix, p: usize, q: usize) -> Result<usize> {
    a.require_square()?;
    let n = a.nrows();
    if p >= n || q >= n {
        return Err(Error::PreconditionViolated(format!(
            "indices ({}, {}) out of range for size {n}",
            p + 1,
            q + 1
        )));
    }
    Ok(n)
}

/// Packages a pair after re-checking the defining equation; a failure means
/// a bug in the construction, never a property of the input.
fn certify(
    a: &TropMatrix,
    lambda: Scalar,
    entries: Vec<Scalar>,
    trace: ConstructionTrace,
) -> Result<GenEigenpair> {
    let vector = TropVector::new(entries)?;
    if !verify_parts(a, &lambda, &vector)? {
        return Err(Error::InternalVerificationFailed);
    }
    debug_assert_eq!(vector.max_norm().ok(), Some(Scalar::from_int(0)));
    Ok(GenEigenpair {
        lambda,
        vector,
        trace,
    })
}
