use std::collections::HashMap;
use std::sync::OnceLock;

use crate::cones::{HCone, Inequality, RayVector, VCone};
use crate::hypermetric::{
    cut_vector, hyp7_facet_representatives, hyp7_ray_representatives, hypermetric_inequality, CutSet,
};
use crate::symmetry::symmetric_group;

/// The facets of `HYP_7`, orbit by orbit.
pub struct Hyp7 {
    pub cone: HCone,
    /// Start of each orbit in `cone.inequalities()`, plus the total.
    pub offsets: Vec<usize>,
    /// Orbit of each facet (0-based).
    pub orbit_of: Vec<usize>,
    /// Index of the facet built from `b^j`, for each orbit `j`.
    pub representatives: Vec<usize>,
    /// For each facet, a `Sym(7)` index mapping its orbit representative onto
    /// it.
    pub transporters: Vec<usize>,
    index: HashMap<Vec<i64>, usize>,
}

impl Hyp7 {
    pub fn len(&self) -> usize {
        self.orbit_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit_of.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn orbit_size(&self, j: usize) -> usize {
        self.offsets[j + 1] - self.offsets[j]
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        (0..self.orbit_count()).map(|j| self.orbit_size(j)).collect()
    }

    pub fn coeffs(&self, k: usize) -> &[i64] {
        self.cone.inequalities()[k].coeffs()
    }

    /// Position of an `≤`-form coefficient vector.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }
}

fn build() -> Hyp7 {
    let g = symmetric_group(7).expect("Sym(7)");
    let mut ineqs = Vec::new();
    let mut offsets = vec![0];
    let mut orbit_of = Vec::new();
    let mut representatives = Vec::new();
    let mut transporters = Vec::new();
    for (j, b) in hyp7_facet_representatives().iter().enumerate() {
        let f = hypermetric_inequality(b).expect("valid b-vector");
        for (v, k) in g.orbit_with_transporters(f.coeffs()) {
            if v == f.coeffs() {
                representatives.push(ineqs.len());
            }
            ineqs.push(Inequality::le(v).expect("nonzero"));
            orbit_of.push(j);
            transporters.push(k);
        }
        offsets.push(ineqs.len());
    }
    let cone = HCone::new(7, ineqs).expect("pair-indexed");
    assert_eq!(cone.len(), orbit_of.len(), "facet orbits overlap");
    let index = cone
        .inequalities()
        .iter()
        .enumerate()
        .map(|(k, f)| (f.coeffs().to_vec(), k))
        .collect();
    Hyp7 {
        cone,
        offsets,
        orbit_of,
        representatives,
        transporters,
        index,
    }
}

/// Cached; built once per process.
pub fn hyp7() -> &'static Hyp7 {
    static CELL: OnceLock<Hyp7> = OnceLock::new();
    CELL.get_or_init(build)
}

/// All 3773 hypermetric facets of `HYP_7`, orbit-major and lexicographic
/// within each orbit.
pub fn build_hyp7() -> HCone {
    hyp7().cone.clone()
}

/// The 29 ray orbits of `HYP_7` from built-in data (three cut orbits, then
/// `R_4..R_29`), expanded: `(orbit offsets, rays)`. Used by the
/// membership checks that do not need a fresh census.
pub struct KnownRays {
    pub cone: VCone,
    pub offsets: Vec<usize>,
    pub canonical: HashMap<Vec<i64>, usize>,
}

impl KnownRays {
    /// 0-based orbit of a ray, by canonical form.
    pub fn orbit_of(&self, r: &RayVector) -> Option<usize> {
        let g = symmetric_group(7).expect("Sym(7)");
        self.canonical.get(&g.canonical_form(r.coords())).copied()
    }
}

fn build_known() -> KnownRays {
    let g = symmetric_group(7).expect("Sym(7)");
    let mut seeds: Vec<RayVector> = [vec![0], vec![0, 1], vec![0, 1, 2]]
        .iter()
        .map(|s| cut_vector(&CutSet::new(7, s).expect("proper cut")))
        .collect();
    seeds.extend(hyp7_ray_representatives());
    let mut rays = Vec::new();
    let mut offsets = vec![0];
    let mut canonical = HashMap::new();
    for (i, r) in seeds.iter().enumerate() {
        canonical.insert(g.canonical_form(r.coords()), i);
        rays.extend(g.orbit(r.coords()).into_iter().map(|v| RayVector::new(v).expect("nonzero")));
        offsets.push(rays.len());
    }
    KnownRays {
        cone: VCone::new(7, rays).expect("pair-indexed"),
        offsets,
        canonical,
    }
}

/// Cached expansion of the built-in ray orbits.
pub fn known_rays() -> &'static KnownRays {
    static CELL: OnceLock<KnownRays> = OnceLock::new();
    CELL.get_or_init(build_known)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_orbits_of_hyp7() {
        let h = hyp7();
        assert_eq!(h.len(), 3773);
        assert_eq!(h.orbit_sizes(), crate::pipeline::expected::FACET_ORBIT_SIZES);
        let g = symmetric_group(7).unwrap();
        for k in (0..h.len()).step_by(37) {
            let rep = h.coeffs(h.representatives[h.orbit_of[k]]);
            assert_eq!(g.apply_index(h.transporters[k], rep), h.coeffs(k));
            assert_eq!(h.index_of(h.coeffs(k)), Some(k));
        }
    }

    #[test]
    fn known_rays_cover_the_census_sizes() {
        let k = known_rays();
        assert_eq!(k.cone.len(), 37170);
        let r4 = &hyp7_ray_representatives()[0];
        assert_eq!(k.orbit_of(r4), Some(3));
        let s = CutSet::new(7, &[0, 1]).unwrap();
        assert_eq!(k.orbit_of(&cut_vector(&s)), Some(1));
    }
}
