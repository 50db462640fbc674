//! Exact maximum-weight perfect assignment on a principal submatrix, with ε
//! entries forbidden. Handles the subset blocks too large to enumerate.

use num_rational::BigRational;
use num_traits::Zero;

use crate::matrix::TropMatrix;
use crate::semiring::Scalar;

/// Maximum total weight over perfect assignments of the principal submatrix
/// indexed by `subset`; ε when no assignment avoids a forbidden cell.
///
/// O(k³) Hungarian method (shortest augmenting paths with rational
/// potentials) on negated weights; `None` plays the role of +inf.
pub(crate) fn max_assignment(a: &TropMatrix, subset: &[usize]) -> Scalar {
    let k = subset.len();
    if k == 0 {
        return Scalar::from_int(0);
    }
    let cost: Vec<Vec<Option<BigRational>>> = subset
        .iter()
        .map(|&r| {
            subset
                .iter()
                .map(|&c| a.entry(r, c).rational().map(|w| -w))
                .collect()
        })
        .collect();

    // 1-based rows and columns; index 0 is the standard scratch slot
    let mut u = vec![BigRational::zero(); k + 1];
    let mut v = vec![BigRational::zero(); k + 1];
    let mut matched = vec![0usize; k + 1];
    let mut way = vec![0usize; k + 1];

    for i in 1..=k {
        matched[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<BigRational>> = vec![None; k + 1];
        let mut used = vec![false; k + 1];
        loop {
            used[j0] = true;
            let i0 = matched[j0];
            let mut delta: Option<BigRational> = None;
            let mut j1 = 0usize;
            for j in 1..=k {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1].as_ref().map(|c| c - &u[i0] - &v[j]);
                if lt(&cur, &minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if lt(&minv[j], &delta) {
                    delta = minv[j].clone();
                    j1 = j;
                }
            }
            let Some(step) = delta else {
                // every alternating path is blocked by forbidden cells, so
                // the finite bipartite graph has no perfect matching
                return Scalar::Epsilon;
            };
            for j in 0..=k {
                if used[j] {
                    u[matched[j]] += &step;
                    v[j] -= &step;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &step;
                }
            }
            j0 = j1;
            if matched[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut total = BigRational::zero();
    for j in 1..=k {
        let row = subset[matched[j] - 1];
        let col = subset[j - 1];
        match a.entry(row, col).rational() {
            Some(w) => total += w,
            None => return Scalar::Epsilon,
        }
    }
    Scalar::Finite(total)
}

/// `<` with `None` acting as +inf.
fn lt(a: &Option<BigRational>, b: &Option<BigRational>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x < y,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    use crate::sampling::{random_matrix, ScalarPool};

    fn brute_force(a: &TropMatrix, subset: &[usize]) -> Scalar {
        fn recurse(a: &TropMatrix, rows: &[usize], cols: &mut Vec<usize>, acc: &Scalar) -> Scalar {
            if cols.is_empty() {
                return acc.clone();
            }
            let r = rows[rows.len() - cols.len()];
            let mut best = Scalar::Epsilon;
            for idx in 0..cols.len() {
                let c = cols.remove(idx);
                let here = acc.tmul(a.entry(r, c));
                if here.is_finite() {
                    best = best.tadd(&recurse(a, rows, cols, &here));
                }
                cols.insert(idx, c);
            }
            best
        }
        let mut cols = subset.to_vec();
        recurse(a, subset, &mut cols, &Scalar::from_int(0))
    }

    #[test]
    fn degenerate_subsets() {
        let a = TropMatrix::from_rows(vec![vec![Scalar::from_int(5)]]).unwrap();
        assert_eq!(max_assignment(&a, &[]), Scalar::from_int(0));
        assert_eq!(max_assignment(&a, &[0]), Scalar::from_int(5));
        let forbidden = TropMatrix::filled(2, 2, Scalar::Epsilon).unwrap();
        assert_eq!(max_assignment(&forbidden, &[0, 1]), Scalar::Epsilon);
    }

    #[test]
    fn infeasible_when_a_row_is_blocked() {
        let a = TropMatrix::from_rows(vec![
            vec![Scalar::from_int(1), Scalar::Epsilon, Scalar::from_int(2)],
            vec![Scalar::Epsilon, Scalar::Epsilon, Scalar::Epsilon],
            vec![Scalar::from_int(3), Scalar::from_int(1), Scalar::Epsilon],
        ])
        .unwrap();
        assert_eq!(max_assignment(&a, &[0, 1, 2]), Scalar::Epsilon);
    }

    #[test]
    fn agrees_with_brute_force_on_random_blocks() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(401);
        let pool = ScalarPool::small_rationals();
        for round in 0..200 {
            let k = 1 + round % 7;
            let density = (round % 5) as f64 * 0.15;
            let a = random_matrix(&mut rng, k, k, &pool, density);
            let subset: Vec<usize> = (0..k).collect();
            assert_eq!(
                max_assignment(&a, &subset),
                brute_force(&a, &subset),
                "mismatch for {a}"
            );
        }
    }
}
