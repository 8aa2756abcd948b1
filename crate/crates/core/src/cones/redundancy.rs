//! Redundancy removal by exact LP probes.
//!
//! Inequality `f` is redundant in `{x : g·x ≤ 0, g ∈ G}` iff
//! `max f·x  s.t.  g·x ≤ 0 (g ≠ f), Σ x = 1` is at most zero. The slice
//! `Σ x = 1` bounds the problem on pointed cones whose nonzero points have
//! positive coordinate sum (all metric cones). Each probe is solved through
//! its dual `min μ  s.t.  Σ λ_g g + μ·1 = f, λ ≥ 0`, which shares one column
//! store across all probes of a cone.

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use super::{HCone, Inequality};
use crate::error::{Error, Result};
use crate::linalg::simplex::{self, StandardForm, StandardStatus};
use crate::symmetry::{orbit_transversal, PointPermutation};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RedundancyStats {
    /// Inequalities after dropping exact duplicates.
    pub distinct: usize,
    /// LP probes actually solved.
    pub probes: usize,
    /// Total simplex pivots over all probes.
    pub pivots: usize,
}

struct ProbeSet {
    form: StandardForm,
    dim: usize,
}

impl ProbeSet {
    fn new(ineqs: &[Vec<i64>], dim: usize) -> Self {
        let mut columns: Vec<Vec<i64>> = ineqs.to_vec();
        let mut costs = vec![0i64; ineqs.len()];
        columns.push(vec![1; dim]);
        costs.push(1);
        columns.push(vec![-1; dim]);
        costs.push(-1);
        ProbeSet {
            form: StandardForm::from_small(dim, columns, costs),
            dim,
        }
    }

    /// Whether `{g·x ≤ 0 for all g, Σ x = 1}` is nonempty.
    fn slice_nonempty(&self) -> bool {
        let zero = vec![BigInt::from(0); self.dim];
        let sol = simplex::solve(&self.form, &zero, &|_| true);
        sol.status != StandardStatus::Unbounded
    }

    /// `Ok((redundant, pivots))` for inequality `k` against all others.
    fn probe(&self, ineqs: &[Vec<i64>], k: usize) -> Result<(bool, usize)> {
        let rhs: Vec<BigInt> = ineqs[k].iter().map(|&x| BigInt::from(x)).collect();
        let sol = simplex::solve(&self.form, &rhs, &|j| j != k);
        let redundant = match sol.status {
            StandardStatus::Optimal => !sol.value.expect("optimal value").is_positive(),
            // Dual infeasible: the probe LP is unbounded above.
            StandardStatus::Infeasible => false,
            StandardStatus::Unbounded => return Err(Error::EmptySlice),
        };
        Ok((redundant, sol.pivots))
    }
}

fn distinct_le(ineqs: &[Inequality]) -> Vec<Inequality> {
    let mut seen = std::collections::HashSet::new();
    ineqs
        .iter()
        .map(Inequality::to_le)
        .filter(|f| seen.insert(f.coeffs.clone()))
        .collect()
}

/// Single probe: is `list[index]` implied by the other entries of `list`?
/// Duplicates of `list[index]` elsewhere in the list make it redundant.
pub fn is_redundant(list: &[Inequality], index: usize) -> Result<bool> {
    let dim = list
        .first()
        .map(Inequality::dim)
        .ok_or(Error::ZeroVector("inequality list"))?;
    if let Some(bad) = list.iter().find(|f| f.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    let rows: Vec<Vec<i64>> = list.iter().map(|f| f.to_le().coeffs).collect();
    let set = ProbeSet::new(&rows, dim);
    if !set.slice_nonempty() {
        return Err(Error::EmptySlice);
    }
    Ok(set.probe(&rows, index)?.0)
}

/// Minimal sub-list of `list` (first occurrences, `≤` form, input order)
/// defining the same cone. The cone must be full-dimensional.
///
/// With a `pruning_group` that maps the list to itself, only one member per
/// group orbit is probed and its verdict is copied to the whole orbit.
pub fn remove_redundant_inequalities(
    list: &[Inequality],
    pruning_group: Option<&[PointPermutation]>,
) -> Result<(Vec<Inequality>, RedundancyStats)> {
    let ineqs = distinct_le(list);
    let Some(dim) = ineqs.first().map(Inequality::dim) else {
        return Ok((Vec::new(), RedundancyStats::default()));
    };
    if let Some(bad) = ineqs.iter().find(|f| f.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    let rows: Vec<Vec<i64>> = ineqs.iter().map(|f| f.coeffs.clone()).collect();
    let set = ProbeSet::new(&rows, dim);
    if !set.slice_nonempty() {
        return Err(Error::EmptySlice);
    }

    let (probe_list, orbit_of) = match pruning_group {
        Some(group) => {
            let t = orbit_transversal(&rows, group)?;
            (t.representatives, Some(t.orbit_of))
        }
        None => ((0..rows.len()).collect::<Vec<_>>(), None),
    };

    let verdicts: Vec<(bool, usize)> = probe_list
        .par_iter()
        .map(|&k| set.probe(&rows, k))
        .collect::<Result<Vec<_>>>()?;

    let redundant: Vec<bool> = match &orbit_of {
        Some(orbit_of) => orbit_of.iter().map(|&o| verdicts[o].0).collect(),
        None => verdicts.iter().map(|v| v.0).collect(),
    };
    let kept = ineqs
        .into_iter()
        .zip(&redundant)
        .filter(|(_, &r)| !r)
        .map(|(f, _)| f)
        .collect();
    let stats = RedundancyStats {
        distinct: rows.len(),
        probes: probe_list.len(),
        pivots: verdicts.iter().map(|v| v.1).sum(),
    };
    Ok((kept, stats))
}

pub fn remove_redundancy(
    c: &HCone,
    pruning_group: Option<&[PointPermutation]>,
) -> Result<(HCone, RedundancyStats)> {
    let (kept, stats) = remove_redundant_inequalities(c.inequalities(), pruning_group)?;
    Ok((HCone::new(c.points(), kept)?, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles(n: usize) -> Vec<Inequality> {
        crate::hypermetric::generate_met(n).unwrap().inequalities().to_vec()
    }

    #[test]
    fn duplicate_is_removed() {
        let mut list = triangles(4);
        list.push(list[3].clone());
        let (kept, stats) = remove_redundant_inequalities(&list, None).unwrap();
        assert_eq!(kept.len(), 12);
        assert_eq!(stats.distinct, 12);
        assert!(is_redundant(&list, 3).unwrap());
        assert!(!is_redundant(&list[..12], 3).unwrap());
    }

    #[test]
    fn implied_sum_is_removed() {
        let mut list = triangles(3);
        let sum: Vec<i64> = (0..3)
            .map(|k| list[0].coeffs()[k] + list[1].coeffs()[k])
            .collect();
        list.insert(0, Inequality::le(sum).unwrap());
        let (kept, _) = remove_redundant_inequalities(&list, None).unwrap();
        assert_eq!(kept, triangles(3));
    }

    #[test]
    fn pruned_matches_unpruned_on_met5() {
        let list = triangles(5);
        let group = crate::symmetry::symmetric_group(5).unwrap().permutations().to_vec();
        let (a, sa) = remove_redundant_inequalities(&list, None).unwrap();
        let (b, sb) = remove_redundant_inequalities(&list, Some(&group)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 30);
        assert_eq!(sa.probes, 30);
        assert_eq!(sb.probes, 1);
    }
}
