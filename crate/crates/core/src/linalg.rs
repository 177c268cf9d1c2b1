//! Exact linear algebra over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination after clearing
//! denominators row by row, so intermediate entries stay integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Q;

/// Clears denominators of a rational row, returning an integer row with the
/// same span.
fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

/// Rank of an integer matrix given as rows; consumes its input.
pub fn rank_int(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            for c in col + 1..ncols {
                let v = &p[col] * &row[c] - &row[col] * &p[c];
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = top[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    rank_int(rows.iter().map(|r| integer_row(r)).collect())
}

/// Nullity of a square rational matrix.
pub fn nullity(square: &[Vec<Q>]) -> usize {
    square.len() - rank(square)
}

/// Solves `sum_j x_j * columns[j] = target` exactly; `None` if inconsistent.
/// When the columns are dependent an arbitrary solution is returned.
pub fn solve_columns(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let n = columns.len();
    let m = target.len();
    // Augmented rows: one per coordinate.
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut r: Vec<Q> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Q::one() / a[row][col].clone();
        for x in a[row].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = a[row][c].clone() * f.clone();
                    a[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][n].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Q::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[col][c].clone() * f.clone();
                    a[r][c] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q_frac, q_int};

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&qm(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank(&qm(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&qm(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
        let half = vec![vec![q_frac(1, 2), q_frac(1, 3)], vec![q_int(3), q_int(2)]];
        assert_eq!(rank(&half), 1);
    }

    #[test]
    fn solve_and_inverse() {
        let cols = qm(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = solve_columns(&cols, &[q_int(2), q_int(3), q_int(5)]).unwrap();
        assert_eq!(x, vec![q_int(2), q_int(3)]);
        assert!(solve_columns(&cols, &[q_int(2), q_int(3), q_int(6)]).is_none());
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, qm(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&qm(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn rank_matches_naive_elimination() {
        // Vandermonde-like rows with a duplicated combination.
        let rows: Vec<Vec<Q>> = (1..=5)
            .map(|x: i64| (0..4).map(|p| q_int(x.pow(p))).collect())
            .chain(std::iter::once((0..4).map(|p| q_int(2i64.pow(p) + 3i64.pow(p))).collect()))
            .collect();
        assert_eq!(rank(&rows), 4);
        assert_eq!(nullity(&qm(&[&[1, 1], &[1, 1]])), 1);
    }
}
