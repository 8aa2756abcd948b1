//! Published incidence and adjacency tables of `HYP_7`, used for diffing.

pub const FACET_ORBIT_SIZES: [usize; 14] = [105, 210, 210, 420, 35, 105, 21, 420, 105, 42, 630, 420, 840, 210];

pub const RAY_ORBIT_SIZES: [usize; 29] = [7, 21, 35, 2520, 2520, 2520, 2520, 1260, 1260, 252, 2520, 2520, 2520, 2520, 1260, 1260, 630, 2520, 2520, 1260, 840, 840, 420, 420, 840, 630, 420, 210, 105];

/// Tight facets of a fixed ray of `R_i` in each facet orbit `F_j`.
pub const INCIDENCE: [[usize; 14]; 29] = [
    [90, 150, 150, 180, 20, 15, 15, 180, 30, 30, 180, 180, 120, 120],
    [80, 130, 80, 220, 20, 60, 0, 180, 40, 10, 240, 100, 320, 10],
    [75, 126, 96, 180, 18, 36, 12, 156, 30, 12, 162, 132, 240, 84],
    [13, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [14, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [13, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [14, 5, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [15, 4, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [14, 5, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [15, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [11, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [11, 7, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [11, 7, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 7, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [12, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [10, 6, 0, 2, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [11, 5, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [10, 6, 0, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [10, 6, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [11, 6, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [11, 6, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [11, 6, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [7, 6, 1, 3, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0],
    [8, 5, 2, 2, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0],
    [8, 6, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0],
    [8, 6, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    [8, 6, 0, 4, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub const INCIDENCE_TOTALS: [usize; 29] = [1460, 1490, 1359, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20];

/// Rays of each cut orbit adjacent to a fixed ray of `R_i`.
pub const RAY_ADJACENCY: [[usize; 3]; 29] = [
    [6, 21, 35],
    [7, 20, 35],
    [7, 21, 34],
    [3, 6, 11],
    [4, 7, 9],
    [3, 7, 10],
    [3, 7, 10],
    [4, 7, 9],
    [3, 8, 9],
    [5, 5, 10],
    [3, 6, 11],
    [2, 8, 10],
    [4, 5, 11],
    [2, 8, 10],
    [4, 7, 9],
    [3, 9, 8],
    [4, 4, 12],
    [2, 8, 10],
    [3, 7, 10],
    [1, 10, 9],
    [2, 9, 9],
    [4, 6, 10],
    [4, 7, 9],
    [5, 1, 14],
    [1, 9, 10],
    [2, 8, 10],
    [3, 6, 11],
    [5, 1, 14],
    [2, 12, 6],
];

pub const RAY_ADJACENCY_TOTALS: [usize; 29] = [15662, 12532, 10664, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20];

/// Facets of `F_j` adjacent to a fixed facet of `F_i`.
pub const FACET_ADJACENCY: [[usize; 14]; 14] = [
    [86, 168, 110, 216, 35, 56, 13, 196, 14, 6, 54, 36, 64, 18],
    [84, 116, 62, 114, 3, 5, 1, 18, 0, 0, 15, 12, 24, 6],
    [55, 62, 9, 20, 1, 1, 1, 4, 1, 1, 6, 0, 4, 4],
    [54, 57, 10, 25, 2, 2, 0, 6, 1, 0, 3, 3, 6, 0],
    [105, 18, 6, 24, 0, 3, 0, 12, 0, 0, 0, 0, 0, 0],
    [56, 10, 2, 8, 1, 2, 0, 8, 0, 0, 0, 0, 8, 0],
    [65, 10, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10],
    [49, 9, 2, 6, 1, 2, 0, 5, 0, 0, 3, 2, 2, 0],
    [14, 0, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [15, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [9, 5, 2, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0],
    [9, 6, 0, 3, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0],
    [8, 6, 1, 3, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [9, 6, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
];

pub const FACET_ADJACENCY_TOTALS: [usize; 14] = [1072, 460, 169, 169, 168, 95, 95, 81, 20, 20, 20, 20, 20, 20];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_are_row_sums() {
        for (row, t) in INCIDENCE.iter().zip(INCIDENCE_TOTALS) {
            assert_eq!(row.iter().sum::<usize>(), t);
        }
        for (row, t) in FACET_ADJACENCY.iter().zip(FACET_ADJACENCY_TOTALS) {
            assert_eq!(row.iter().sum::<usize>(), t);
        }
        for (row, t) in RAY_ADJACENCY[3..].iter().zip(&RAY_ADJACENCY_TOTALS[3..]) {
            assert_eq!(row.iter().sum::<usize>(), *t);
        }
        assert_eq!(RAY_ORBIT_SIZES.iter().sum::<usize>(), 37170);
        assert_eq!(FACET_ORBIT_SIZES.iter().sum::<usize>(), 3773);
    }

    #[test]
    fn incidence_counts_flags_both_ways() {
        // each F_j facet contains |R_i| inc(i, j) / |F_j| rays of R_i
        for i in 0..29 {
            for j in 0..14 {
                assert_eq!(RAY_ORBIT_SIZES[i] * INCIDENCE[i][j] % FACET_ORBIT_SIZES[j], 0, "({i}, {j})");
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric_in_orbit_counts() {
        for i in 0..14 {
            for j in 0..14 {
                assert_eq!(
                    FACET_ORBIT_SIZES[i] * FACET_ADJACENCY[i][j],
                    FACET_ORBIT_SIZES[j] * FACET_ADJACENCY[j][i]
                );
            }
        }
        for i in 0..29 {
            for j in 0..3 {
                if i < 3 {
                    assert_eq!(RAY_ORBIT_SIZES[i] * RAY_ADJACENCY[i][j], RAY_ORBIT_SIZES[j] * RAY_ADJACENCY[j][i]);
                }
            }
        }
    }
}
