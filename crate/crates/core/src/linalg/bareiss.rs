use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, RationalMatrix, RationalVector};

/// Rank over the rationals. Rows are cleared of denominators and reduced by
/// fraction-free (Bareiss) elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    integer_rank(m.integer_rows(), m.col_count())
}

/// Bareiss elimination on an integer matrix. Every intermediate entry is a
/// minor of the input, so all divisions are exact.
pub fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for k in c + 1..cols {
                let v = &pivot_row[c] * &row[k] - &lead * &pivot_row[k];
                row[k] = v / &prev;
            }
        }
        prev = pivot_row[c].clone();
        rank += 1;
    }
    rank
}

/// Basis of the right nullspace `{x : m x = 0}`, one vector per free column
/// of the reduced row echelon form. Empty iff `rank(m)` equals the column
/// count.
pub fn solve_homogeneous(m: &RationalMatrix) -> Vec<RationalVector> {
    let cols = m.col_count();
    let mut a: Vec<Vec<Rational>> = m.rows().iter().map(|r| r.entries().to_vec()).collect();
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in &mut a[r][c..] {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..cols {
        if next_pivot < pivots.len() && pivots[next_pivot] == free {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(RationalVector::new(v));
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn m(rows: &[&[i64]], cols: usize) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows, cols).unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert!(solve_homogeneous(&RationalMatrix::identity(2)).is_empty());
    }

    #[test]
    fn cuts_on_three_points_span() {
        let cuts = m(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]], 3);
        assert_eq!(rank(&cuts), 3);
    }

    #[test]
    fn single_row_nullspace() {
        let basis = solve_homogeneous(&m(&[&[1, -1]], 2));
        assert_eq!(basis, vec![RationalVector::new(vec![int(1), int(1)])]);
    }

    #[test]
    fn rank_with_skipped_columns_and_fractions() {
        let rows = vec![
            RationalVector::new(vec![int(0), crate::linalg::rational(1, 2), int(1)]),
            RationalVector::new(vec![int(0), int(1), int(2)]),
            RationalVector::new(vec![int(0), int(0), crate::linalg::rational(3, 7)]),
        ];
        let mat = RationalMatrix::new(rows, 3).unwrap();
        assert_eq!(rank(&mat), 2);
        let basis = solve_homogeneous(&mat);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], RationalVector::from_ints(&[1, 0, 0]));
    }

    #[test]
    fn empty_matrix() {
        let mat = RationalMatrix::new(vec![], 4).unwrap();
        assert_eq!(rank(&mat), 0);
        assert_eq!(solve_homogeneous(&mat).len(), 4);
    }
}
