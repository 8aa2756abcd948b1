use std::time::Instant;

use serde::Serialize;

use super::hyp7::hyp7;
use crate::cones::{remove_redundancy, HCone, Inequality, RayVector};
use crate::error::{Error, Result};
use crate::hypermetric::{as_cut, cut7_nonhypermetric_representatives};
use crate::linalg::{solve_homogeneous, RationalMatrix};
use crate::symmetry::stabilizer;

pub const SUBCONE_COUNT: usize = 26;

#[derive(Clone, Debug, Serialize)]
pub struct SubconeResult {
    /// `i` of `O_i`, 1-based.
    pub orbit: usize,
    pub facets: Vec<Inequality>,
    pub rays: Vec<RayVector>,
    pub non_cut: RayVector,
    pub stabilizer_order: usize,
    pub probes: usize,
    pub pivots: usize,
    pub millis: u128,
}

/// `HYP_7 ∩ {⟨O_i, d⟩ ≤ 0}` as an H-cone (3774 inequalities).
pub fn subcone(i: usize) -> Result<HCone> {
    let o = subcone_facet(i)?;
    let mut ineqs = hyp7().cone.inequalities().to_vec();
    ineqs.push(Inequality::le(o.coeffs().to_vec())?);
    HCone::new(7, ineqs)
}

fn subcone_facet(i: usize) -> Result<Inequality> {
    if !(1..=SUBCONE_COUNT).contains(&i) {
        return Err(Error::assertion(format!("subcone index {i} not in 1..=26")));
    }
    Ok(cut7_nonhypermetric_representatives()[i - 1].clone())
}

/// Rays of a simplicial cone: one nullspace solve per dropped facet,
/// oriented into the dropped halfspace.
pub fn simplex_rays(facets: &[Inequality]) -> Result<Vec<RayVector>> {
    let dim = facets.first().map_or(0, Inequality::dim);
    let mut out = Vec::with_capacity(facets.len());
    for skip in 0..facets.len() {
        let rows: Vec<&[i64]> = facets
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, f)| f.coeffs())
            .collect();
        let basis = solve_homogeneous(&RationalMatrix::from_int_rows(&rows, dim)?);
        if basis.len() != 1 {
            return Err(Error::assertion(format!(
                "nullspace of {} facets has dimension {}",
                rows.len(),
                basis.len()
            )));
        }
        let v = basis[0].to_primitive_integers().expect("nonzero nullspace vector");
        let mut r = RayVector::from_bigints(&v, true)?;
        let f = facets[skip].to_le();
        let value = crate::cones::evaluate(&f, &r)?;
        if value == 0 {
            return Err(Error::assertion("degenerate simplex ray"));
        }
        if value > 0 {
            r = RayVector::directed(r.coords().iter().map(|x| -x).collect())?;
        }
        out.push(RayVector::new(r.into_coords())?);
    }
    Ok(out)
}

/// Redundancy removal on `C_i` pruned by the stabilizer of `O_i`, then ray
/// extraction.
pub fn solve_subcone(i: usize) -> Result<SubconeResult> {
    let start = Instant::now();
    let o = subcone_facet(i)?;
    let group = stabilizer(o.coeffs(), 7)?;
    let (reduced, stats) = remove_redundancy(&subcone(i)?, Some(&group))?;
    finish(i, reduced, group.len(), stats.probes, stats.pivots, start)
}

/// Same as [`solve_subcone`] without symmetry pruning.
pub fn solve_subcone_unpruned(i: usize) -> Result<SubconeResult> {
    let start = Instant::now();
    let (reduced, stats) = remove_redundancy(&subcone(i)?, None)?;
    finish(i, reduced, 1, stats.probes, stats.pivots, start)
}

fn finish(
    i: usize,
    reduced: HCone,
    stabilizer_order: usize,
    probes: usize,
    pivots: usize,
    start: Instant,
) -> Result<SubconeResult> {
    let facets = reduced.inequalities().to_vec();
    if facets.len() != 21 {
        return Err(Error::assertion(format!(
            "subcone C_{i} has {} non-redundant inequalities, expected 21",
            facets.len()
        )));
    }
    let rays = simplex_rays(&facets)?;
    let non_cuts: Vec<&RayVector> = rays.iter().filter(|r| as_cut(r).is_none()).collect();
    if non_cuts.len() != 1 {
        return Err(Error::assertion(format!(
            "subcone C_{i} has {} non-cut rays, expected 1",
            non_cuts.len()
        )));
    }
    let non_cut = non_cuts[0].clone();
    Ok(SubconeResult {
        orbit: i,
        facets,
        rays,
        non_cut,
        stabilizer_order,
        probes,
        pivots,
        millis: start.elapsed().as_millis(),
    })
}
