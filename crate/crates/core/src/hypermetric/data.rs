/// Representatives `b^1..b^14` of the facet orbits `F_1..F_14` of `HYP_7`.
pub(crate) const HYP7_B_VECTORS: [[i64; 7]; 14] = [
    [1, 1, -1, 0, 0, 0, 0],
    [1, 1, 1, -1, -1, 0, 0],
    [1, 1, 1, 1, -1, -2, 0],
    [2, 1, 1, -1, -1, -1, 0],
    [1, 1, 1, 1, -1, -1, -1],
    [2, 2, 1, -1, -1, -1, -1],
    [1, 1, 1, 1, 1, -2, -2],
    [2, 1, 1, 1, -1, -1, -2],
    [3, 1, 1, -1, -1, -1, -1],
    [1, 1, 1, 1, 1, -1, -3],
    [2, 2, 1, 1, -1, -1, -3],
    [3, 1, 1, 1, -1, -2, -2],
    [3, 2, 1, -1, -1, -1, -2],
    [2, 1, 1, 1, 1, -2, -3],
];

// Rows of the correspondence table between non-hypermetric facets of CUT_7
// and non-cut extreme rays of HYP_7, in pair order 12, 13, ..., 67.

/// Facet vectors `O_1..O_26`, valid as `⟨O_i, d⟩ ≥ 0` on the cut cone.
pub(crate) const CUT7_FACETS: [[i64; 21]; 26] = [
    [-1, -1, 0, 0, 1, 1, -1, 0, 1, 0, 1, 1, 0, 1, 0, 1, -1, 1, 1, -1, 0],
    [-1, 1, 0, 0, -1, 1, 1, 0, -1, 0, 1, -1, 0, 1, 0, -1, 1, 1, 1, 1, 0],
    [-1, 1, 0, 0, 1, 1, 1, 0, -1, 0, 1, 1, 0, -1, 0, 1, 1, -1, -1, 1, 0],
    [-1, -1, -1, 1, 1, 1, -1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, -1, -1],
    [-1, 1, -1, 1, 1, -1, 1, 0, 0, 1, -1, 0, -1, 0, 1, 1, 1, -1, 0, 1, 1],
    [1, 1, -1, 1, 1, -1, -1, 0, 0, -1, 1, 0, -1, 0, 1, 1, 1, -1, 0, 1, 1],
    [1, 1, 1, 1, 1, -1, -1, 0, 0, -1, 1, 0, -1, 0, 1, -1, -1, 1, 0, 1, 1],
    [-1, -1, -1, 0, 1, 2, -1, 0, 1, 1, 2, 0, 1, 1, 2, -1, 1, 1, 0, -1, -2],
    [1, 1, -1, 0, 1, -2, -1, 0, 1, -1, 2, 0, 1, -1, 2, 1, 1, -1, 0, -1, 2],
    [-1, -1, -1, 0, 1, 2, -1, 0, -1, 1, 2, 0, -1, 1, 2, 1, 1, 1, 0, 1, -2],
    [-1, 1, -1, 0, 1, 2, 1, 0, -1, 1, 2, 0, 1, -1, -2, 1, 1, 1, 0, 1, -2],
    [1, 1, 1, 0, -1, 2, -1, 0, 1, 1, -2, 0, 1, 1, -2, -1, 1, -1, 0, 1, 2],
    [1, 1, -1, 0, -1, 2, -1, 0, 1, 1, -2, 0, 1, 1, -2, 1, -1, 1, 0, 1, 2],
    [-1, -1, 1, 0, -1, 2, -1, 0, 1, -1, 2, 0, 1, -1, 2, 1, 1, -1, 0, -1, 2],
    [-1, -1, -2, 1, 1, 2, 0, -1, 1, 1, 2, -2, 1, 1, 1, 2, 2, 3, -1, -2, -2],
    [-1, 1, -2, -1, 1, 2, 0, -1, -1, 1, 2, 2, 1, -1, -1, -2, 2, 3, 1, 2, -2],
    [-1, -1, 2, -1, 1, 2, 0, 1, -1, 1, 2, 2, -1, 1, 1, 2, -2, -3, 1, 2, -2],
    [-1, 1, 2, -1, -1, 2, 0, 1, -1, -1, 2, -2, 1, 1, -1, 2, 2, -3, -1, 2, 2],
    [1, 1, -2, -1, -1, 2, 0, 1, 1, 1, -2, 2, 1, 1, -1, -2, -2, 3, -1, 2, 2],
    [1, 1, 2, -1, -1, 2, 0, -1, 1, 1, -2, -2, 1, 1, -1, 2, 2, -3, -1, 2, 2],
    [-1, -1, 2, -1, -1, 2, 0, 1, -1, -1, 2, 2, -1, -1, 1, 2, 2, -3, -1, 2, 2],
    [-1, -1, -2, 1, 2, 3, -1, -2, 1, 2, 3, -2, 1, 2, 3, 2, 3, 5, -2, -3, -5],
    [-1, 1, -2, 1, -2, 3, 1, -2, 1, -2, 3, 2, -1, 2, -3, 2, -3, 5, 2, -3, 5],
    [-1, -1, 2, 1, 2, -3, -1, 2, 1, 2, -3, 2, 1, 2, -3, -2, -3, 5, -2, 3, 5],
    [-1, -1, -2, -1, 2, 3, -1, -2, -1, 2, 3, -2, -1, 2, 3, -2, 3, 5, 2, 3, -5],
    [-1, -1, 2, -1, 2, 3, -1, 2, -1, 2, 3, 2, -1, 2, 3, 2, -3, -5, 2, 3, -5],
];

/// Ray generators `R_4..R_29`; `R_{i+3}` pairs with `O_i`.
pub(crate) const HYP7_RAYS: [[i64; 21]; 26] = [
    [2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 2],
    [2, 1, 2, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1],
    [2, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2],
    [2, 2, 2, 1, 1, 2, 2, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2],
    [2, 1, 2, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1],
    [1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 1, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1, 1, 1],
    [2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2],
    [1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 1],
    [2, 2, 2, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 2],
    [2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 1, 1, 2, 1, 2],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 2, 1, 1, 1],
    [1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 1, 1],
    [2, 2, 1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 2, 2, 2, 1],
    [2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 2],
    [2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 1, 2],
    [2, 2, 1, 1, 2, 1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 1, 2],
    [2, 1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1],
    [1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1],
    [2, 2, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2, 2, 1, 1, 2, 1, 1, 1],
    [1, 1, 2, 2, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 2],
    [1, 2, 2, 2, 2, 1, 2, 2, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 2, 1],
    [1, 1, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1, 2, 1, 1],
    [1, 1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 2, 1, 1, 1, 2],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2],
];

/// Graph label `j` of the complement graph attached to each of `R_4..R_29`.
pub(crate) const HYP7_RAY_GRAPHS: [usize; 26] = [24, 4, 23, 25, 5, 26, 1, 22, 21, 20, 19, 7, 8, 18, 14, 15, 17, 13, 6, 2, 16, 11, 10, 9, 12, 3];

/// Switching class of each facet row, and the (1-based) cut used to reach it
/// from the first row of its class. Class base rows carry no cut.
pub(crate) const CUT7_SWITCHING: [(usize, &[usize]); 26] = [
    (0, &[]),
    (0, &[3, 5, 6]),
    (0, &[3, 5, 4]),
    (1, &[]),
    (1, &[3, 7]),
    (1, &[2, 3, 7]),
    (1, &[1, 5, 6]),
    (2, &[]),
    (2, &[1, 4, 6]),
    (2, &[5]),
    (2, &[3, 5]),
    (2, &[1, 7]),
    (2, &[7, 4, 1]),
    (2, &[6, 4]),
    (3, &[]),
    (3, &[5, 3]),
    (3, &[5, 4]),
    (3, &[7, 2, 1]),
    (3, &[7, 4, 1]),
    (3, &[1, 7]),
    (3, &[4, 5, 6]),
    (4, &[]),
    (4, &[3, 6]),
    (4, &[7, 4]),
    (4, &[5]),
    (4, &[5, 4]),
];
