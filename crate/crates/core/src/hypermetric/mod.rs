//! Generators for the inequality and ray families on `n` points: hypermetric
//! inequalities, cuts, triangle systems, built-in `HYP_7`/`CUT_7` data,
//! switching, and graph path metrics.

mod data;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::cones::{HCone, Inequality, RayVector, VCone};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::pairs::{pair_count, pair_index, pairs};
use crate::symmetry::PointPermutation;


pub const MIN_CUT_POINTS: usize = 3;
pub const MAX_CUT_POINTS: usize = 8;

/// Integer vector `b` with `Σ b_i = 1` and at least two nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BVector(Vec<i64>);

impl BVector {
    pub fn new(b: Vec<i64>) -> Result<Self> {
        let sum: i64 = b.iter().sum();
        if sum != 1 {
            return Err(Error::BadBVectorSum(sum));
        }
        if b.iter().filter(|x| **x != 0).count() < 2 {
            return Err(Error::ZeroVector("hypermetric inequality"));
        }
        Ok(BVector(b))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn points(&self) -> usize {
        self.0.len()
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// `b(S) = Σ_{i ∈ S} b_i` (0-based members).
    pub fn weight(&self, s: &[usize]) -> i64 {
        s.iter().map(|&i| self.0[i]).sum()
    }

    /// `(p·b)[p(i)] = b[i]`.
    pub fn permuted(&self, p: &PointPermutation) -> BVector {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[p.at(i)] = x;
        }
        BVector(out)
    }

    /// Entries sorted in descending order (a complete `Sym(n)` invariant).
    pub fn sorted_descending(&self) -> BVector {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        BVector(v)
    }
}

impl fmt::Display for BVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A bipartition `{S, complement}` stored by the side not containing the
/// last point. Members are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutSet {
    n: usize,
    members: Vec<usize>,
}

impl CutSet {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidCut(format!("point {} out of range 1..={n}", bad + 1)));
        }
        if set.is_empty() || set.len() == n {
            return Err(Error::InvalidCut("empty or full set gives the zero cut".into()));
        }
        let members: Vec<usize> = if set.contains(&(n - 1)) {
            (0..n).filter(|i| !set.contains(i)).collect()
        } else {
            set.into_iter().collect()
        };
        Ok(CutSet { n, members })
    }

    pub fn from_one_based(n: usize, members: &[usize]) -> Result<Self> {
        if members.contains(&0) {
            return Err(Error::InvalidCut("point 0 in a 1-based set".into()));
        }
        let zero: Vec<usize> = members.iter().map(|x| x - 1).collect();
        Self::new(n, &zero)
    }

    /// From a bitmask over points `0..n`.
    pub fn from_mask(n: usize, mask: u32) -> Result<Self> {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        Self::new(n, &members)
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// `min(|S|, n - |S|)`, which indexes the cut orbit.
    pub fn orbit_size_class(&self) -> usize {
        self.members.len().min(self.n - self.members.len())
    }

    pub fn separates(&self, i: usize, j: usize) -> bool {
        self.contains(i) != self.contains(j)
    }
}

impl fmt::Display for CutSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on points `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({}, {}) out of range", a + 1, b + 1)));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", a + 1)));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({}, {})", a + 1, b + 1)));
            }
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: pairs(n).into_iter().collect(),
        }
    }

    /// Copy without the given edges (missing edges are ignored).
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Self {
        let mut out = self.clone();
        for &(a, b) in edges {
            out.edges.remove(&(a.min(b), a.max(b)));
        }
        out
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Coefficients `b_i b_j` before content normalization.
pub fn hypermetric_coefficients(b: &BVector) -> Vec<i64> {
    pairs(b.points())
        .into_iter()
        .map(|(i, j)| b.0[i] * b.0[j])
        .collect()
}

/// `Σ b_i b_j d_ij ≤ 0`.
pub fn hypermetric_inequality(b: &BVector) -> Result<Inequality> {
    Inequality::le(hypermetric_coefficients(b))
}

pub fn cut_vector(s: &CutSet) -> RayVector {
    let coords = pairs(s.n)
        .into_iter()
        .map(|(i, j)| s.separates(i, j) as i64)
        .collect();
    RayVector::new(coords).expect("proper cut is nonzero")
}

/// If `r` is a cut vector, its cut set.
pub fn as_cut(r: &RayVector) -> Option<CutSet> {
    let n = crate::pairs::points_for_len(r.dim()).ok()?;
    if r.coords().iter().any(|&x| x != 0 && x != 1) {
        return None;
    }
    // Side of each point relative to the last one.
    let members: Vec<usize> = (0..n - 1)
        .filter(|&i| r.coords()[pair_index(n, i, n - 1)] == 1)
        .collect();
    let s = CutSet::new(n, &members).ok()?;
    (cut_vector(&s) == *r).then_some(s)
}

fn check_cut_points(n: usize) -> Result<()> {
    if !(MIN_CUT_POINTS..=MAX_CUT_POINTS).contains(&n) {
        return Err(Error::UnsupportedN {
            n,
            min: MIN_CUT_POINTS,
            max: MAX_CUT_POINTS,
        });
    }
    Ok(())
}

/// All `2^(n-1) - 1` nonzero cut sets, ordered by orbit (`min(|S|, n-|S|)`)
/// then by bitmask.
pub fn cut_sets(n: usize) -> Result<Vec<CutSet>> {
    check_cut_points(n)?;
    let mut sets: Vec<(usize, u32, CutSet)> = (1u32..(1 << (n - 1)))
        .map(|mask| {
            let s = CutSet::from_mask(n, mask).expect("proper subset");
            (s.orbit_size_class(), mask, s)
        })
        .collect();
    sets.sort();
    Ok(sets.into_iter().map(|(_, _, s)| s).collect())
}

/// The cut cone as a V-cone.
pub fn generate_cuts(n: usize) -> Result<VCone> {
    VCone::new(n, cut_sets(n)?.iter().map(cut_vector).collect())
}

/// All `3·C(n,3)` triangle inequalities `d_ij - d_ik - d_jk ≤ 0`.
pub fn generate_met(n: usize) -> Result<HCone> {
    if n < 3 {
        return Err(Error::UnsupportedN {
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let dim = pair_count(n);
    let mut out = Vec::with_capacity(n * (n - 1) * (n - 2) / 2);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for (a, b, c) in [(i, j, k), (i, k, j), (j, k, i)] {
                    let mut v = vec![0; dim];
                    v[pair_index(n, a, b)] = 1;
                    v[pair_index(n, a, c)] = -1;
                    v[pair_index(n, b, c)] = -1;
                    out.push(Inequality::le(v)?);
                }
            }
        }
    }
    HCone::new(n, out)
}

/// `b^1..b^14`, representatives of the facet orbits of `HYP_7`.
pub fn hyp7_facet_representatives() -> Vec<BVector> {
    data::HYP7_B_VECTORS
        .iter()
        .map(|b| BVector::new(b.to_vec()).expect("valid built-in b-vector"))
        .collect()
}

/// Facet orbit representatives of `HYP_n` for `3 ≤ n ≤ 7`: the `b^j` with at
/// most `n` nonzero entries, truncated to `n` points. For `n ≤ 6` these are
/// all 0-extensions (triangle, pentagonal, and for `n = 6` two more).
pub fn hyp_facet_representatives(n: usize) -> Result<Vec<BVector>> {
    if !(3..=7).contains(&n) {
        return Err(Error::UnsupportedN { n, min: 3, max: 7 });
    }
    Ok(data::HYP7_B_VECTORS
        .iter()
        .filter(|b| b[n..].iter().all(|&x| x == 0))
        .map(|b| BVector::new(b[..n].to_vec()).expect("valid built-in b-vector"))
        .collect())
}

/// The facets of `HYP_n` (`3 ≤ n ≤ 7`), orbit-major, lexicographic within
/// each orbit.
pub fn generate_hyp(n: usize) -> Result<HCone> {
    let g = crate::symmetry::symmetric_group(n)?;
    let mut out = Vec::new();
    for b in hyp_facet_representatives(n)? {
        for v in g.orbit(hypermetric_inequality(&b)?.coeffs()) {
            out.push(Inequality::le(v)?);
        }
    }
    HCone::new(n, out)
}

/// `O_1..O_26`: non-hypermetric facets of `CUT_7`, one per orbit, as
/// `⟨O_i, d⟩ ≥ 0`.
pub fn cut7_nonhypermetric_representatives() -> Vec<Inequality> {
    data::CUT7_FACETS
        .iter()
        .map(|v| Inequality::ge(v.to_vec()).expect("nonzero built-in facet"))
        .collect()
}

/// Generators of the non-cut ray orbits `R_4..R_29` of `HYP_7`.
pub fn hyp7_ray_representatives() -> Vec<RayVector> {
    data::HYP7_RAYS
        .iter()
        .map(|v| RayVector::new(v.to_vec()).expect("nonzero built-in ray"))
        .collect()
}

/// Label `j` of the graph `G_j` whose complement describes each of the rays
/// returned by [`hyp7_ray_representatives`].
pub fn hyp7_ray_graph_labels() -> [usize; 26] {
    data::HYP7_RAY_GRAPHS
}

/// For each `O_i`: its switching class (0-based block of the table) and the
/// cut switching the first facet of the block onto it (`None` for the first).
pub fn cut7_switching_labels() -> Vec<(usize, Option<CutSet>)> {
    data::CUT7_SWITCHING
        .iter()
        .map(|(class, set)| {
            let cut = (!set.is_empty()).then(|| CutSet::from_one_based(7, set).expect("valid built-in cut"));
            (*class, cut)
        })
        .collect()
}

/// Negates the coefficients on pairs separated by `s`. Requires `s` to lie
/// on `f`.
pub fn switch(f: &Inequality, s: &CutSet) -> Result<Inequality> {
    if f.dim() != pair_count(s.n) {
        return Err(Error::DimensionMismatch {
            expected: pair_count(s.n),
            found: f.dim(),
        });
    }
    let value = crate::cones::evaluate(f, &cut_vector(s))?;
    if value != 0 {
        return Err(Error::SwitchNotIncident(value));
    }
    let coeffs = pairs(s.n)
        .into_iter()
        .zip(f.coeffs())
        .map(|((i, j), &c)| if s.separates(i, j) { -c } else { c })
        .collect();
    Inequality::new(coeffs, f.side())
}

/// Shortest-path metric of a connected graph.
pub fn path_metric(g: &SimpleGraph) -> Result<RayVector> {
    let adj = g.adjacency();
    let mut out = vec![0; pair_count(g.n)];
    for src in 0..g.n {
        let mut dist = vec![usize::MAX; g.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for t in src + 1..g.n {
            if dist[t] == usize::MAX {
                return Err(Error::Disconnected);
            }
            out[pair_index(g.n, src, t)] = dist[t] as i64;
        }
    }
    RayVector::new(out)
}

/// `n! 2^n / C(2n, n)`.
pub fn lovasz_bound(n: usize) -> Rational {
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= k;
    }
    let mut binom = BigInt::one();
    for k in 0..n {
        binom = binom * (2 * n - k) / (k + 1);
    }
    Rational::new(fact * (BigInt::one() << n), binom)
}

/// One representative per `Sym(n)`-class of integer vectors with entries in
/// `[-max_abs, max_abs]`, sum 1 and at least two nonzero entries. Each
/// representative is sorted in descending order; the stream is in
/// lexicographically descending order.
pub fn enumerate_bvectors(n: usize, max_abs: i64) -> impl Iterator<Item = BVector> {
    fn rec(n: usize, max_abs: i64, hi: i64, prefix: &mut Vec<i64>, sum: i64, out: &mut Vec<BVector>) {
        let left = (n - prefix.len()) as i64;
        if left == 0 {
            if sum == 1 && prefix.iter().filter(|x| **x != 0).count() >= 2 {
                out.push(BVector(prefix.clone()));
            }
            return;
        }
        for x in (-max_abs..=hi).rev() {
            // Remaining entries are at most x and at least -max_abs.
            let rest = left - 1;
            if sum + x + rest * x < 1 || sum + x - rest * max_abs > 1 {
                continue;
            }
            prefix.push(x);
            rec(n, max_abs, x, prefix, sum + x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && max_abs >= 1 {
        rec(n, max_abs, max_abs, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::evaluate;
    use crate::symmetry::{apply, orbit, symmetric_group};

    #[test]
    fn triangle_from_b1() {
        let f = hypermetric_inequality(&hyp7_facet_representatives()[0]).unwrap();
        let mut expected = vec![0; 21];
        expected[0] = 1; // 12
        expected[1] = -1; // 13
        expected[6] = -1; // 23
        assert_eq!(f.coeffs(), expected.as_slice());
    }

    #[test]
    fn pentagonal_sign_pattern_of_b5() {
        let f = hypermetric_inequality(&hyp7_facet_representatives()[4]).unwrap();
        for (k, (i, j)) in pairs(7).into_iter().enumerate() {
            let same = (i < 4) == (j < 4);
            assert_eq!(f.coeffs()[k], if same { 1 } else { -1 });
        }
    }

    #[test]
    fn degenerate_b_vectors_rejected() {
        assert!(matches!(BVector::new(vec![1, 0, 0, 0, 0, 0, 0]), Err(Error::ZeroVector(_))));
        assert!(matches!(BVector::new(vec![1, 1, 0]), Err(Error::BadBVectorSum(2))));
    }

    #[test]
    fn cut_on_three_points() {
        let s = CutSet::from_one_based(3, &[1]).unwrap();
        assert_eq!(cut_vector(&s).coords(), &[1, 1, 0]);
        assert!(CutSet::new(3, &[]).is_err());
        assert!(CutSet::new(3, &[0, 1, 2]).is_err());
    }

    #[test]
    fn cut_complement_is_same_cut() {
        for mask in 1u32..127 {
            let s = CutSet::from_mask(7, mask).unwrap();
            let c = CutSet::from_mask(7, !mask & 127).unwrap();
            assert_eq!(s, c);
            assert_eq!(cut_vector(&s), cut_vector(&c));
            assert_eq!(as_cut(&cut_vector(&s)), Some(s));
        }
    }

    #[test]
    fn cut_counts_and_orbits() {
        assert_eq!(generate_cuts(3).unwrap().len(), 3);
        let five = cut_sets(5).unwrap();
        assert_eq!(five.len(), 15);
        assert_eq!(five.iter().filter(|s| s.orbit_size_class() == 1).count(), 5);
        assert_eq!(five.iter().filter(|s| s.orbit_size_class() == 2).count(), 10);
        let seven = cut_sets(7).unwrap();
        let sizes: Vec<usize> = (1..=3)
            .map(|k| seven.iter().filter(|s| s.orbit_size_class() == k).count())
            .collect();
        assert_eq!(sizes, vec![7, 21, 35]);
        let two = cut_vector(&CutSet::new(7, &[0, 1]).unwrap());
        assert_eq!(orbit(two.coords(), 7).unwrap().len(), 21);
        assert!(generate_cuts(9).is_err());
    }

    #[test]
    fn hyp_counts() {
        assert_eq!(hyp_facet_representatives(5).unwrap().len(), 2);
        assert_eq!(hyp_facet_representatives(6).unwrap().len(), 4);
        assert_eq!(generate_hyp(3).unwrap().len(), 3);
        assert_eq!(generate_hyp(5).unwrap().len(), 40);
        assert_eq!(generate_hyp(7).unwrap().len(), 3773);
        assert!(generate_hyp(8).is_err());
    }

    #[test]
    fn met_counts() {
        assert_eq!(generate_met(3).unwrap().len(), 3);
        assert_eq!(generate_met(5).unwrap().len(), 30);
        assert_eq!(generate_met(7).unwrap().len(), 105);
    }

    #[test]
    fn built_in_data_shapes() {
        let b = hyp7_facet_representatives();
        assert_eq!(b.len(), 14);
        assert_eq!(b[0].entries(), &[1, 1, -1, 0, 0, 0, 0]);
        assert_eq!(b[10].entries(), &[2, 2, 1, 1, -1, -1, -3]);
        assert!(b.iter().all(|b| b.max_abs() <= 3));
        let o = cut7_nonhypermetric_representatives();
        assert_eq!(
            o[0].coeffs(),
            &[-1, -1, 0, 0, 1, 1, -1, 0, 1, 0, 1, 1, 0, 1, 0, 1, -1, 1, 1, -1, 0]
        );
        assert_eq!(
            o[21].coeffs(),
            &[-1, -1, -2, 1, 2, 3, -1, -2, 1, 2, 3, -2, 1, 2, 3, 2, 3, 5, -2, -3, -5]
        );
        let r = hyp7_ray_representatives();
        assert_eq!(r[0].coords(), &[2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 2]);
        assert_eq!(r[25].coords(), &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2]);
        assert_eq!(hyp7_ray_graph_labels().len(), 26);
    }

    #[test]
    fn facets_valid_on_cuts_with_twenty_incident() {
        let cuts = generate_cuts(7).unwrap();
        for f in cut7_nonhypermetric_representatives() {
            let mut incident = 0;
            for r in cuts.rays() {
                let s = f.slack(r).unwrap();
                assert!(s >= 0);
                incident += (s == 0) as usize;
            }
            assert_eq!(incident, 20);
        }
    }

    #[test]
    fn table_switching_labels_reproduce_rows() {
        let o = cut7_nonhypermetric_representatives();
        let labels = cut7_switching_labels();
        let mut base = 0;
        for (i, (class, cut)) in labels.iter().enumerate() {
            let Some(s) = cut else {
                base = i;
                continue;
            };
            assert_eq!(labels[base].0, *class);
            assert_eq!(switch(&o[base], s).unwrap(), o[i], "row O_{}", i + 1);
        }
    }

    #[test]
    fn switch_is_involution_and_checks_incidence() {
        let o = cut7_nonhypermetric_representatives();
        let s = CutSet::from_one_based(7, &[3, 7]).unwrap();
        assert_eq!(switch(&switch(&o[3], &s).unwrap(), &s).unwrap(), o[3]);
        let bad = CutSet::from_one_based(7, &[1]).unwrap();
        if evaluate(&o[3], &cut_vector(&bad)).unwrap() != 0 {
            assert!(matches!(switch(&o[3], &bad), Err(Error::SwitchNotIncident(_))));
        }
    }

    #[test]
    fn path_metrics() {
        assert_eq!(path_metric(&SimpleGraph::complete(7)).unwrap().coords(), &[1; 21]);
        let g = SimpleGraph::complete(7).without_edges(&[(0, 1), (1, 2)]);
        let d = path_metric(&g).unwrap();
        assert_eq!(d.coords().iter().filter(|&&x| x == 2).count(), 2);
        let disconnected = SimpleGraph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(path_metric(&disconnected), Err(Error::Disconnected)));
        assert!(SimpleGraph::new(3, &[(0, 0)]).is_err());
    }

    #[test]
    fn lovasz_bound_values() {
        assert_eq!(lovasz_bound(2), Rational::new(4.into(), 3.into()));
        assert_eq!(lovasz_bound(7), Rational::new((5040 * 128).into(), 3432.into()));
        assert!(lovasz_bound(7) >= Rational::from_integer(3.into()));
    }

    #[test]
    fn enumeration_small_cases() {
        let three: Vec<BVector> = enumerate_bvectors(3, 1).collect();
        assert_eq!(three, vec![BVector(vec![1, 1, -1])]);
        let five: Vec<BVector> = enumerate_bvectors(5, 2).collect();
        assert!(five.contains(&BVector(vec![1, 1, 1, -1, -1])));
        let seven: Vec<BVector> = enumerate_bvectors(7, 3).collect();
        for b in hyp7_facet_representatives() {
            assert!(seven.contains(&b.sorted_descending()));
        }
        // Brute force over all vectors for a small case.
        let mut brute = BTreeSet::new();
        for code in 0..5i64.pow(4) {
            let v: Vec<i64> = (0..4).map(|k| (code / 5i64.pow(k)) % 5 - 2).collect();
            if let Ok(b) = BVector::new(v) {
                brute.insert(b.sorted_descending());
            }
        }
        let fast: BTreeSet<BVector> = enumerate_bvectors(4, 2).collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn permutation_commutes_with_hypermetric_construction() {
        let g = symmetric_group(7).unwrap();
        for b in hyp7_facet_representatives() {
            for k in (0..g.order()).step_by(997) {
                let p = g.permutation(k);
                let lhs = apply(p, hypermetric_inequality(&b).unwrap().coeffs()).unwrap();
                let rhs = hypermetric_inequality(&b.permuted(p)).unwrap();
                assert_eq!(lhs, rhs.coeffs());
            }
        }
    }
}
