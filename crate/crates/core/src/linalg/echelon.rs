//! Incremental integer row echelon form used on hot paths (tight-set ranks,
//! adjacency tests). Rows are kept primitive; arithmetic runs in `i128` and
//! falls back to big integers on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
enum Rows {
    Small(Vec<(usize, Vec<i128>)>),
    Big(Vec<(usize, Vec<BigInt>)>),
}

#[derive(Clone, Debug)]
pub struct IntEchelon {
    cols: usize,
    rows: Rows,
}

impl IntEchelon {
    pub fn new(cols: usize) -> Self {
        IntEchelon {
            cols,
            rows: Rows::Small(Vec::new()),
        }
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Small(r) => r.len(),
            Rows::Big(r) => r.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.cols
    }

    /// Adds a row; returns whether the rank increased.
    pub fn insert(&mut self, row: &[i64]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if self.is_full() {
            return false;
        }
        if let Rows::Small(rows) = &mut self.rows {
            let v: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            match reduce_small(rows, v) {
                Some(Some(v)) => {
                    insert_sorted(rows, v.iter().position(|x| *x != 0).unwrap(), v);
                    return true;
                }
                Some(None) => return false,
                None => {
                    let big = rows
                        .iter()
                        .map(|(p, r)| (*p, r.iter().map(|&x| BigInt::from(x)).collect()))
                        .collect();
                    self.rows = Rows::Big(big);
                }
            }
        }
        let Rows::Big(rows) = &mut self.rows else {
            unreachable!()
        };
        let v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        match reduce_big(rows, v) {
            Some(v) => {
                let p = v.iter().position(|x| !x.is_zero()).unwrap();
                insert_sorted(rows, p, v);
                true
            }
            None => false,
        }
    }
}

fn insert_sorted<T>(rows: &mut Vec<(usize, Vec<T>)>, pivot: usize, v: Vec<T>) {
    let at = rows.partition_point(|(p, _)| *p < pivot);
    rows.insert(at, (pivot, v));
}

/// `None` on overflow, `Some(None)` if the row reduces to zero.
fn reduce_small(rows: &[(usize, Vec<i128>)], mut v: Vec<i128>) -> Option<Option<Vec<i128>>> {
    for (p, r) in rows {
        let lead = v[*p];
        if lead == 0 {
            continue;
        }
        let piv = r[*p];
        for k in 0..v.len() {
            let a = piv.checked_mul(v[k])?;
            let b = lead.checked_mul(r[k])?;
            v[k] = a.checked_sub(b)?;
        }
        let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
        if g == 0 {
            return Some(None);
        }
        let first = v.iter().find(|x| **x != 0).copied().unwrap_or(1);
        let g = if first < 0 { -g } else { g };
        if g != 1 {
            v.iter_mut().for_each(|x| *x /= g);
        }
    }
    if v.iter().all(|x| *x == 0) {
        return Some(None);
    }
    let first = v.iter().find(|x| **x != 0).copied().unwrap();
    if first < 0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    Some(Some(v))
}

fn reduce_big(rows: &[(usize, Vec<BigInt>)], mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    for (p, r) in rows {
        if v[*p].is_zero() {
            continue;
        }
        let lead = v[*p].clone();
        let piv = &r[*p];
        for k in 0..v.len() {
            v[k] = piv * &v[k] - &lead * &r[k];
        }
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return None;
        }
        v.iter_mut().for_each(|x| *x /= &g);
    }
    let first = v.iter().find(|x| !x.is_zero())?.clone();
    if first.is_negative() {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
    Some(v)
}

/// Rank of integer rows; stops early once `stop_at` is reached.
pub fn rank_i64<'a, I>(rows: I, cols: usize, stop_at: Option<usize>) -> usize
where
    I: IntoIterator<Item = &'a [i64]>,
{
    let limit = stop_at.unwrap_or(cols).min(cols);
    let mut ech = IntEchelon::new(cols);
    for row in rows {
        if ech.rank() >= limit {
            break;
        }
        ech.insert(row);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{integer_rank, rank, RationalMatrix};
    use proptest::prelude::*;

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let rows: Vec<Vec<i64>> = vec![
            vec![big, big - 1, 7, 1],
            vec![big - 5, big, 3, 2],
            vec![11, big - 2, big, 3],
            vec![big, 5, big - 9, big],
        ];
        let expected = integer_rank(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            4,
        );
        assert_eq!(rank_i64(rows.iter().map(|r| r.as_slice()), 4, None), expected);
    }

    proptest! {
        #[test]
        fn agrees_with_bareiss(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..9)) {
            let mat = RationalMatrix::from_int_rows(&rows, 6).unwrap();
            prop_assert_eq!(rank_i64(rows.iter().map(|r| r.as_slice()), 6, None), rank(&mat));
        }
    }
}
