//! Pair indexing: position of `(i, j)`, `i < j`, in row-major lexicographic
//! order. Points are 0-based internally.

use crate::error::{Error, Result};

pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Recovers `n` from a vector length `n(n-1)/2`.
pub fn points_for_len(len: usize) -> Result<usize> {
    let mut n = 2;
    while pair_count(n) < len {
        n += 1;
    }
    if pair_count(n) == len {
        Ok(n)
    } else {
        Err(Error::NotPairIndexed(len))
    }
}

#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All pairs in index order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Column labels `12, 13, ...` (1-based, as printed in tables).
pub fn pair_labels(n: usize) -> Vec<String> {
    pairs(n)
        .into_iter()
        .map(|(i, j)| format!("{}{}", i + 1, j + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration() {
        for n in 2..9 {
            for (k, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
                assert_eq!(pair_index(n, j, i), k);
            }
        }
    }

    #[test]
    fn labels_for_seven_points() {
        let labels = pair_labels(7);
        assert_eq!(labels.len(), 21);
        assert_eq!(labels[0], "12");
        assert_eq!(labels[5], "17");
        assert_eq!(labels[6], "23");
        assert_eq!(labels[20], "67");
    }

    #[test]
    fn recovers_point_count() {
        assert_eq!(points_for_len(21).unwrap(), 7);
        assert_eq!(points_for_len(3).unwrap(), 3);
        assert!(points_for_len(20).is_err());
    }
}
