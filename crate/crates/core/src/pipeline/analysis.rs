use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::census::{cuts_form_clique, Census};
use super::hyp7::hyp7;
use crate::cones::{bfs_diameter, bfs_distances, dot, Inequality};
use crate::error::{Error, Result};
use crate::hypermetric::{
    cut7_nonhypermetric_representatives, cut7_switching_labels, cut_sets, cut_vector, enumerate_bvectors, hypermetric_inequality, switch,
    BVector,
};
use crate::linalg::rank_i64;
use crate::symmetry::symmetric_group;

#[derive(Clone, Debug, Serialize)]
pub struct DiameterReport {
    pub value: usize,
    /// Two vertices at distance `value`.
    pub witness: (Vec<i64>, Vec<i64>),
    /// BFS eccentricity of each orbit representative.
    pub eccentricities: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Diameters {
    pub skeleton: DiameterReport,
    pub ridge: DiameterReport,
    /// The skeleton witness is a pair of non-cut rays with disjoint
    /// neighborhoods.
    pub skeleton_witness_disjoint: bool,
    /// The skeleton restricted to the 63 cuts is complete.
    pub cuts_complete: bool,
}

/// Diameters of the skeleton and ridge graph by BFS from one vertex per
/// orbit.
pub fn diameters(c: &Census) -> Result<Diameters> {
    let skeleton = c.skeleton();
    let sk = bfs_diameter(c.len(), |v| skeleton[v].iter().copied(), &c.representatives)?;

    // A non-cut pair with disjoint neighborhoods is at distance at least 3,
    // since non-cut rays have only cut neighbors.
    let non_cut: Vec<usize> = (0..c.len()).filter(|&r| !c.is_cut_orbit(c.orbit_of[r])).collect();
    let disjoint_pair = c
        .representatives
        .iter()
        .filter(|&&a| !c.is_cut_orbit(c.orbit_of[a]))
        .find_map(|&a| {
            let na: BTreeSet<usize> = skeleton[a].iter().copied().collect();
            non_cut
                .iter()
                .find(|&&b| b != a && !na.contains(&b) && skeleton[b].iter().all(|x| !na.contains(x)))
                .map(|&b| (a, b))
        });
    let (skeleton_pair, skeleton_witness_disjoint) = match disjoint_pair {
        Some((a, b)) => {
            let dist = bfs_distances(c.len(), &|v: usize| skeleton[v].iter().copied(), a);
            (if dist[b] == Some(sk.value) { (a, b) } else { sk.witness }, dist[b] == Some(sk.value))
        }
        None => (sk.witness, false),
    };

    let h = hyp7();
    let ridge = c.ridge_graph();
    let rg = bfs_diameter(h.len(), |v| ridge[v].iter().copied(), &h.representatives)?;
    Ok(Diameters {
        skeleton: DiameterReport {
            value: sk.value,
            witness: (
                c.rays[skeleton_pair.0].coords().to_vec(),
                c.rays[skeleton_pair.1].coords().to_vec(),
            ),
            eccentricities: sk.eccentricities,
        },
        ridge: DiameterReport {
            value: rg.value,
            witness: (h.coeffs(rg.witness.0).to_vec(), h.coeffs(rg.witness.1).to_vec()),
            eccentricities: rg.eccentricities,
        },
        skeleton_witness_disjoint,
        cuts_complete: cuts_form_clique(c),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SwitchingClasses {
    /// Classes of 1-based `O_i` indices, each sorted, ordered by least member.
    pub classes: Vec<Vec<usize>>,
    /// Switches tried (facet representative, incident cut).
    pub switches: usize,
    /// Switches whose result is not in any of the 26 orbits.
    pub outside: usize,
    /// Each labeled row of the built-in table equals the switch of the first
    /// row of its block by the labeled cut.
    pub labels_reproduced: bool,
}

impl SwitchingClasses {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Orbits `O_1..O_26` joined whenever a switch of one lands in the other.
pub fn switching_classes() -> Result<SwitchingClasses> {
    let g = symmetric_group(7)?;
    let reps = cut7_nonhypermetric_representatives();
    let orbit_of: HashMap<Vec<i64>, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, f)| (g.canonical_form(f.coeffs()), i))
        .collect();
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    let (mut switches, mut outside) = (0, 0);
    for (i, f) in reps.iter().enumerate() {
        for s in cut_sets(7)? {
            if dot(f.coeffs(), cut_vector(&s).coords()) != 0 {
                continue;
            }
            switches += 1;
            let t = switch(f, &s)?;
            match orbit_of.get(&g.canonical_form(t.coeffs())) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
                None => outside += 1,
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..reps.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i + 1);
    }
    let labels = cut7_switching_labels();
    let mut base = 0;
    let mut labels_reproduced = true;
    for (i, (_, cut)) in labels.iter().enumerate() {
        match cut {
            None => base = i,
            Some(s) => labels_reproduced &= switch(&reps[base], s).ok().as_ref() == Some(&reps[i]),
        }
    }
    Ok(SwitchingClasses {
        classes: groups.into_values().collect(),
        switches,
        outside,
        labels_reproduced,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Completeness {
    pub max_abs: i64,
    /// Canonical b-vectors enumerated.
    pub candidates: usize,
    /// Candidates valid on every extreme ray.
    pub valid: usize,
    /// Candidates defining a facet, as sorted b-vectors.
    pub facets: Vec<Vec<i64>>,
    /// Facet orbit (1-based `F_j`) of each facet found, or 0 if new.
    pub orbits: Vec<usize>,
    /// Whether the facets found are exactly the 14 known orbits.
    pub complete: bool,
}

/// Tests every canonical b-vector with entries bounded by `max_abs` for
/// validity on all extreme rays and for facetness (incident rays of rank 20).
pub fn verify_facet_completeness(c: &Census, max_abs: i64) -> Result<Completeness> {
    let g = symmetric_group(7)?;
    let h = hyp7();
    let known: HashMap<Vec<i64>, usize> = h
        .representatives
        .iter()
        .enumerate()
        .map(|(j, &f)| (g.canonical_form(h.coeffs(f)), j + 1))
        .collect();
    let candidates: Vec<BVector> = enumerate_bvectors(7, max_abs).collect();
    let verdicts: Vec<(bool, bool)> = candidates
        .par_iter()
        .map(|b| classify(c, &hypermetric_inequality(b).expect("valid b-vector")))
        .collect();
    let mut facets = Vec::new();
    let mut orbits = Vec::new();
    for (b, &(_, facet)) in candidates.iter().zip(&verdicts) {
        if facet {
            let f = hypermetric_inequality(b)?;
            facets.push(b.entries().to_vec());
            orbits.push(known.get(&g.canonical_form(f.coeffs())).copied().unwrap_or(0));
        }
    }
    let found: BTreeSet<usize> = orbits.iter().copied().collect();
    let complete = !found.contains(&0) && found.len() == known.len();
    Ok(Completeness {
        max_abs,
        candidates: candidates.len(),
        valid: verdicts.iter().filter(|v| v.0).count(),
        facets,
        orbits,
        complete,
    })
}

/// `(valid, facet)` of an inequality against the census rays.
pub fn classify(c: &Census, f: &Inequality) -> (bool, bool) {
    let f = f.to_le();
    let mut incident = Vec::new();
    for r in &c.rays {
        let v = dot(f.coeffs(), r.coords());
        if v > 0 {
            return (false, false);
        }
        if v == 0 {
            incident.push(r.coords());
        }
    }
    let rank = rank_i64(incident.iter().copied(), 21, Some(20));
    (true, rank == 20)
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplexFaceWitness {
    /// `k` of `F_k`.
    pub facet: usize,
    /// `m` of `O_m`.
    pub cycle_orbit: usize,
    pub triangle: Vec<i64>,
    /// Member of `O_m`, valid as `≥ 0`.
    pub cycle_facet: Vec<i64>,
    /// Cuts on `F_k` (equal to the cuts on both witnesses), 1-based sets.
    pub cuts: Vec<Vec<usize>>,
    pub rank: usize,
}

pub const SIMPLEX_FACE_PAIRS: [(usize, usize); 4] = [(11, 23), (12, 24), (13, 22), (14, 25)];

fn cut_mask(coeffs: &[i64], cuts: &[Vec<i64>]) -> u64 {
    cuts.iter()
        .enumerate()
        .filter(|(_, c)| dot(coeffs, c) == 0)
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// For `F_11..F_14`, a triangle facet and a member of the paired cycle
/// orbit whose common cuts are exactly the cuts on `F_k`.
pub fn simplex_face_decomposition() -> Result<Vec<SimplexFaceWitness>> {
    let g = symmetric_group(7)?;
    let h = hyp7();
    let sets = cut_sets(7)?;
    let cuts: Vec<Vec<i64>> = sets.iter().map(|s| cut_vector(s).into_coords()).collect();
    let triangles: Vec<(usize, u64)> = (h.offsets[0]..h.offsets[1])
        .map(|t| (t, cut_mask(h.coeffs(t), &cuts)))
        .collect();
    let os = cut7_nonhypermetric_representatives();
    let mut out = Vec::new();
    for (k, m) in SIMPLEX_FACE_PAIRS {
        let fk = h.coeffs(h.representatives[k - 1]);
        let target = cut_mask(fk, &cuts);
        let cycle = g.orbit(os[m - 1].coeffs());
        let hit = triangles.iter().find_map(|&(t, mt)| {
            cycle
                .iter()
                .find(|o| mt & cut_mask(o, &cuts) == target)
                .map(|o| (t, o.clone()))
        });
        let Some((t, o)) = hit else {
            return Err(Error::assertion(format!("no triangle and O_{m} facet cut out F_{k}")));
        };
        let on_face: Vec<usize> = (0..cuts.len()).filter(|&j| target >> j & 1 == 1).collect();
        out.push(SimplexFaceWitness {
            facet: k,
            cycle_orbit: m,
            triangle: h.coeffs(t).to_vec(),
            cycle_facet: o,
            cuts: on_face
                .iter()
                .map(|&j| sets[j].members().iter().map(|x| x + 1).collect())
                .collect(),
            rank: rank_i64(on_face.iter().map(|&j| cuts[j].as_slice()), 21, None),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn switching_class_sizes() {
        let s = switching_classes().unwrap();
        assert_eq!(s.sizes(), [3, 4, 7, 7, 5]);
        assert_eq!(s.outside, 0);
        assert!(s.labels_reproduced);
    }

    #[test]
    fn simplex_faces_split_into_triangle_and_cycle_facet() {
        let w = simplex_face_decomposition().unwrap();
        assert_eq!(w.len(), 4);
        for x in &w {
            assert_eq!(x.cuts.len(), 19);
            assert_eq!(x.rank, 19);
        }
    }
}
