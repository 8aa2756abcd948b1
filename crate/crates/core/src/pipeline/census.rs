use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::bits::Bits;
use super::hyp7::{hyp7, Hyp7};
use super::subcone::{solve_subcone, SubconeResult, SUBCONE_COUNT};
use crate::cones::{dot, is_extreme_ray, RayVector};
use crate::error::{Error, Result};
use crate::hypermetric::{cut7_nonhypermetric_representatives, cut_vector, hyp7_ray_graph_labels, CutSet};
use crate::linalg::rank_i64;
use crate::symmetry::symmetric_group;

const DIM: usize = 21;

/// One ray orbit `R_i`.
#[derive(Clone, Debug, Serialize)]
pub struct RayOrbit {
    /// `i` of `R_i`, 1-based.
    pub index: usize,
    pub representative: RayVector,
    pub canonical: Vec<i64>,
    pub size: usize,
    /// Members of the cut side for cut orbits (1-based).
    pub cut: Option<Vec<usize>>,
    /// Subcone `C_i` the orbit was found in.
    pub subcone: Option<usize>,
    /// Label of the graph attached to the paired table row.
    pub graph: Option<usize>,
}

/// All extreme rays of `HYP_7` with their incidences.
pub struct Census {
    pub subcones: Vec<SubconeResult>,
    pub orbits: Vec<RayOrbit>,
    pub rays: Vec<RayVector>,
    /// Start of each orbit in `rays`, plus the total.
    pub offsets: Vec<usize>,
    pub orbit_of: Vec<usize>,
    /// Index in `rays` of each orbit representative.
    pub representatives: Vec<usize>,
    pub transporters: Vec<usize>,
    /// Per ray, the facets of `HYP_7` containing it.
    pub tight: Vec<Bits>,
    /// Per facet, the rays it contains.
    pub incident: Vec<Bits>,
    /// Milliseconds spent in each stage.
    pub timings: Vec<(String, u128)>,
    index: HashMap<Vec<i64>, usize>,
    ray_neighbors: OnceLock<Vec<Vec<usize>>>,
    facet_neighbors: OnceLock<Vec<Vec<usize>>>,
}

/// Solves all 26 subcones (in parallel) and assembles the census.
pub fn run_census() -> Result<Census> {
    let start = Instant::now();
    let subcones = (1..=SUBCONE_COUNT)
        .into_par_iter()
        .map(solve_subcone)
        .collect::<Result<Vec<_>>>()?;
    let elapsed = start.elapsed().as_millis();
    let mut census = assemble_census(subcones)?;
    census.timings.insert(0, ("subcones".into(), elapsed));
    Ok(census)
}

fn cut_representatives() -> Vec<CutSet> {
    [vec![0], vec![0, 1], vec![0, 1, 2]]
        .iter()
        .map(|s| CutSet::new(7, s).expect("proper cut"))
        .collect()
}

/// Expands the three cut orbits and the 26 subcone rays under `Sym(7)`,
/// verifies extremality of each representative and computes all incidences.
pub fn assemble_census(subcones: Vec<SubconeResult>) -> Result<Census> {
    let mut timings = Vec::new();
    let start = Instant::now();
    if subcones.len() != SUBCONE_COUNT || subcones.iter().enumerate().any(|(k, s)| s.orbit != k + 1) {
        return Err(Error::assertion("expected the results of subcones 1..=26 in order"));
    }
    let h = hyp7();
    let g = symmetric_group(7)?;
    let mut seeds: Vec<(RayVector, Option<Vec<usize>>, Option<usize>)> = cut_representatives()
        .into_iter()
        .map(|s| (cut_vector(&s), Some(s.members().iter().map(|x| x + 1).collect()), None))
        .collect();
    seeds.extend(subcones.iter().map(|s| (s.non_cut.clone(), None, Some(s.orbit))));

    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    let mut rays = Vec::new();
    let mut offsets = vec![0];
    let mut orbit_of = Vec::new();
    let mut representatives = Vec::new();
    let mut transporters = Vec::new();
    for (i, (rep, cut, subcone)) in seeds.into_iter().enumerate() {
        let canonical = g.canonical_form(rep.coords());
        if !seen.insert(canonical.clone()) {
            return Err(Error::assertion(format!("ray orbit R_{} duplicates an earlier orbit", i + 1)));
        }
        let members = g.orbit_with_transporters(rep.coords());
        for (v, k) in members.iter() {
            if v.as_slice() == rep.coords() {
                representatives.push(rays.len());
            }
            rays.push(RayVector::new(v.clone())?);
            orbit_of.push(i);
            transporters.push(*k);
        }
        offsets.push(rays.len());
        orbits.push(RayOrbit {
            index: i + 1,
            representative: rep,
            canonical,
            size: members.len(),
            cut,
            subcone,
            graph: subcone.map(|i| hyp7_ray_graph_labels()[i - 1]),
        });
    }
    timings.push(("orbit expansion".into(), start.elapsed().as_millis()));

    let start = Instant::now();
    for o in &orbits {
        if !is_extreme_ray(&h.cone, &o.representative)? {
            return Err(Error::assertion(format!("R_{} is not an extreme ray", o.index)));
        }
    }
    timings.push(("extremality".into(), start.elapsed().as_millis()));

    let start = Instant::now();
    let tight = rays
        .par_iter()
        .map(|ray| {
            let mut bits = Bits::new(h.len());
            for (k, f) in h.cone.inequalities().iter().enumerate() {
                let v = dot(f.coeffs(), ray.coords());
                if v > 0 {
                    return Err(Error::NotInCone { index: k, value: v });
                }
                if v == 0 {
                    bits.set(k);
                }
            }
            Ok(bits)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut incident = vec![Bits::new(rays.len()); h.len()];
    for (r, bits) in tight.iter().enumerate() {
        for k in bits.ones() {
            incident[k].set(r);
        }
    }
    timings.push(("incidence".into(), start.elapsed().as_millis()));

    let index = rays
        .iter()
        .enumerate()
        .map(|(k, r)| (r.coords().to_vec(), k))
        .collect();
    Ok(Census {
        subcones,
        orbits,
        rays,
        offsets,
        orbit_of,
        representatives,
        transporters,
        tight,
        incident,
        timings,
        index,
        ray_neighbors: OnceLock::new(),
        facet_neighbors: OnceLock::new(),
    })
}

impl Census {
    pub fn hyp7(&self) -> &'static Hyp7 {
        hyp7()
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn is_cut_orbit(&self, i: usize) -> bool {
        self.orbits[i].cut.is_some()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Rank test for adjacency of two rays: their common facets have rank 19.
    pub fn rays_adjacent(&self, a: usize, b: usize) -> bool {
        if a == b || self.tight[a].and_count(&self.tight[b]) < DIM - 2 {
            return false;
        }
        let h = hyp7();
        let common = self.tight[a].and(&self.tight[b]);
        rank_i64(common.ones().map(|k| h.coeffs(k)), DIM, Some(DIM - 2)) >= DIM - 2
    }

    /// Rank test for adjacency of two facets: their common rays have rank 19.
    pub fn facets_adjacent(&self, a: usize, b: usize) -> bool {
        if a == b || self.incident[a].and_count(&self.incident[b]) < DIM - 2 {
            return false;
        }
        let common = self.incident[a].and(&self.incident[b]);
        rank_i64(common.ones().map(|k| self.rays[k].coords()), DIM, Some(DIM - 2)) >= DIM - 2
    }

    /// Neighbors of each ray orbit representative in the skeleton.
    pub fn representative_ray_neighbors(&self) -> &[Vec<usize>] {
        self.ray_neighbors.get_or_init(|| {
            self.representatives
                .par_iter()
                .map(|&r| (0..self.len()).filter(|&s| self.rays_adjacent(r, s)).collect())
                .collect()
        })
    }

    /// Neighbors of each facet orbit representative in the ridge graph.
    pub fn representative_facet_neighbors(&self) -> &[Vec<usize>] {
        self.facet_neighbors.get_or_init(|| {
            let h = hyp7();
            h.representatives
                .par_iter()
                .map(|&f| (0..h.len()).filter(|&g| self.facets_adjacent(f, g)).collect())
                .collect()
        })
    }

    /// Full skeleton adjacency lists, transported from the representatives.
    pub fn skeleton(&self) -> Vec<Vec<usize>> {
        let g = symmetric_group(7).expect("Sym(7)");
        let reps = self.representative_ray_neighbors();
        (0..self.len())
            .into_par_iter()
            .map(|v| {
                let k = self.transporters[v];
                reps[self.orbit_of[v]]
                    .iter()
                    .map(|&u| {
                        self.index_of(&g.apply_index(k, self.rays[u].coords()))
                            .expect("ray set is Sym(7)-invariant")
                    })
                    .collect()
            })
            .collect()
    }

    /// Full ridge-graph adjacency lists, transported from the representatives.
    pub fn ridge_graph(&self) -> Vec<Vec<usize>> {
        let g = symmetric_group(7).expect("Sym(7)");
        let h = hyp7();
        let reps = self.representative_facet_neighbors();
        (0..h.len())
            .into_par_iter()
            .map(|v| {
                let k = h.transporters[v];
                reps[h.orbit_of[v]]
                    .iter()
                    .map(|&u| {
                        h.index_of(&g.apply_index(k, h.coeffs(u)))
                            .expect("facet set is Sym(7)-invariant")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Entry `(i, j)`: facets of `F_j` containing the representative of `R_i`.
pub fn incidence_table(c: &Census) -> Vec<Vec<usize>> {
    let h = hyp7();
    c.representatives
        .iter()
        .map(|&r| {
            let mut row = vec![0; h.orbit_count()];
            for k in c.tight[r].ones() {
                row[h.orbit_of[k]] += 1;
            }
            row
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RayAdjacency {
    /// Entry `(i, j)`: rays of `R_j` adjacent to the representative of `R_i`.
    pub counts: Vec<Vec<usize>>,
    pub totals: Vec<usize>,
    /// No two non-cut rays are adjacent.
    pub non_cut_independent: bool,
}

impl RayAdjacency {
    /// The first three columns (cut orbits).
    pub fn cut_columns(&self) -> Vec<Vec<usize>> {
        self.counts.iter().map(|row| row[..3].to_vec()).collect()
    }
}

pub fn ray_adjacency_table(c: &Census) -> RayAdjacency {
    let neighbors = c.representative_ray_neighbors();
    let counts: Vec<Vec<usize>> = neighbors
        .iter()
        .map(|ns| {
            let mut row = vec![0; c.orbit_count()];
            for &s in ns {
                row[c.orbit_of[s]] += 1;
            }
            row
        })
        .collect();
    let totals = counts.iter().map(|r| r.iter().sum()).collect();
    let non_cut_independent = counts
        .iter()
        .enumerate()
        .filter(|(i, _)| !c.is_cut_orbit(*i))
        .all(|(_, row)| row.iter().enumerate().all(|(j, &x)| c.is_cut_orbit(j) || x == 0));
    RayAdjacency {
        counts,
        totals,
        non_cut_independent,
    }
}

/// Entry `(i, j)`: facets of `F_j` adjacent to the representative of `F_i`.
pub fn facet_adjacency_table(c: &Census) -> Vec<Vec<usize>> {
    let h = hyp7();
    c.representative_facet_neighbors()
        .iter()
        .map(|ns| {
            let mut row = vec![0; h.orbit_count()];
            for &g in ns {
                row[h.orbit_of[g]] += 1;
            }
            row
        })
        .collect()
}

/// For each `O_i`, the non-cut ray orbit (1-based `R` index) with a member
/// violating it. Fails unless each violation set is a singleton.
pub fn correspondence_check(c: &Census) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, o) in cut7_nonhypermetric_representatives().iter().enumerate() {
        let violated: BTreeSet<usize> = (0..c.len())
            .into_par_iter()
            .filter(|&r| !c.is_cut_orbit(c.orbit_of[r]) && o.slack(&c.rays[r]).expect("dim 21") < 0)
            .map(|r| c.orbit_of[r] + 1)
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        if violated.len() != 1 {
            return Err(Error::assertion(format!(
                "O_{} is violated by {} ray orbits: {:?}",
                i + 1,
                violated.len(),
                violated
            )));
        }
        out.push((i + 1, *violated.iter().next().expect("singleton")));
    }
    Ok(out)
}

/// `|R_i| · inc(i, j) = |F_j| · #(rays of R_i on the representative of F_j)`
/// for all orbit pairs; returns the failing pairs (1-based).
pub fn double_counting_mismatches(c: &Census) -> Vec<(usize, usize)> {
    let h = hyp7();
    let inc = incidence_table(c);
    let mut bad = Vec::new();
    for (i, row) in inc.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let f = h.representatives[j];
            let on_facet = c.incident[f].ones().filter(|&r| c.orbit_of[r] == i).count();
            if c.orbits[i].size * x != h.orbit_size(j) * on_facet {
                bad.push((i + 1, j + 1));
            }
        }
    }
    bad
}

/// Non-cut orbits (1-based) whose representative does not have a complete
/// local graph on exactly 20 cut neighbors.
pub fn local_graph_failures(c: &Census) -> Vec<usize> {
    let neighbors = c.representative_ray_neighbors();
    (0..c.orbit_count())
        .filter(|&i| !c.is_cut_orbit(i))
        .filter(|&i| {
            let ns = &neighbors[i];
            let ok = ns.len() == 20
                && ns.iter().all(|&s| c.is_cut_orbit(c.orbit_of[s]))
                && ns
                    .iter()
                    .enumerate()
                    .all(|(a, &x)| ns[a + 1..].iter().all(|&y| c.rays_adjacent(x, y)));
            !ok
        })
        .map(|i| i + 1)
        .collect()
}

/// The 63 cuts are pairwise adjacent.
pub fn cuts_form_clique(c: &Census) -> bool {
    let neighbors = c.representative_ray_neighbors();
    (0..3).all(|i| {
        let cuts = neighbors[i].iter().filter(|&&s| c.is_cut_orbit(c.orbit_of[s])).count();
        cuts == c.offsets[3] - 1
    })
}
