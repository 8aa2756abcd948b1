use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use super::analysis::{
    diameters, simplex_face_decomposition, switching_classes, verify_facet_completeness, Completeness, Diameters,
    SimplexFaceWitness, SwitchingClasses,
};
use super::census::{
    correspondence_check, double_counting_mismatches, facet_adjacency_table, incidence_table, local_graph_failures,
    ray_adjacency_table, Census, RayAdjacency, RayOrbit,
};
use super::expected;
use super::hyp7::hyp7;
use crate::error::Result;
use crate::hypermetric::hyp7_facet_representatives;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct FacetOrbit {
    /// `j` of `F_j`, 1-based.
    pub index: usize,
    pub b: Vec<i64>,
    pub representative: Vec<i64>,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubconeSummary {
    pub orbit: usize,
    pub non_cut: Vec<i64>,
    pub facets: usize,
    pub rays: usize,
    pub cuts: usize,
    pub stabilizer_order: usize,
    pub probes: usize,
    pub pivots: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Matrix {
    pub rows: Vec<Vec<usize>>,
    pub totals: Vec<usize>,
}

impl Matrix {
    fn new(rows: Vec<Vec<usize>>) -> Self {
        let totals = rows.iter().map(|r| r.iter().sum()).collect();
        Matrix { rows, totals }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Checks {
    /// Orbit pairs `(R_i, F_j)` failing `|R_i|·inc = |F_j|·inc'`.
    pub double_counting_mismatches: Vec<(usize, usize)>,
    /// Non-cut orbits whose local graph is not `K_20`.
    pub local_graph_failures: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub version: u32,
    pub facet_count: usize,
    pub ray_count: usize,
    pub facet_orbits: Vec<FacetOrbit>,
    pub ray_orbits: Vec<RayOrbit>,
    pub subcones: Vec<SubconeSummary>,
    pub incidence: Matrix,
    pub ray_adjacency: RayAdjacency,
    pub facet_adjacency: Matrix,
    /// `(i, k)`: `O_i` is violated exactly by the orbit `R_k`.
    pub correspondence: Vec<(usize, usize)>,
    pub switching: SwitchingClasses,
    pub diameters: Diameters,
    pub simplex_faces: Vec<SimplexFaceWitness>,
    pub completeness: Option<Completeness>,
    pub checks: Checks,
    pub timings: BTreeMap<String, u128>,
}

/// Computes every table of the census. The completeness sweep is included
/// when `sweep_bound` is given.
pub fn census_report(c: &Census, sweep_bound: Option<i64>) -> Result<CensusReport> {
    let h = hyp7();
    let mut timings: BTreeMap<String, u128> = c.timings.iter().cloned().collect();
    let mut timed = |name: &str, start: Instant| {
        timings.insert(name.to_string(), start.elapsed().as_millis());
    };

    let facet_orbits = hyp7_facet_representatives()
        .into_iter()
        .enumerate()
        .map(|(j, b)| FacetOrbit {
            index: j + 1,
            b: b.entries().to_vec(),
            representative: h.coeffs(h.representatives[j]).to_vec(),
            size: h.orbit_size(j),
        })
        .collect();
    let subcones = c
        .subcones
        .iter()
        .map(|s| SubconeSummary {
            orbit: s.orbit,
            non_cut: s.non_cut.coords().to_vec(),
            facets: s.facets.len(),
            rays: s.rays.len(),
            cuts: s.rays.len() - 1,
            stabilizer_order: s.stabilizer_order,
            probes: s.probes,
            pivots: s.pivots,
            millis: s.millis,
        })
        .collect();

    let t = Instant::now();
    let incidence = Matrix::new(incidence_table(c));
    timed("incidence table", t);
    let t = Instant::now();
    let ray_adjacency = ray_adjacency_table(c);
    timed("ray adjacency", t);
    let t = Instant::now();
    let facet_adjacency = Matrix::new(facet_adjacency_table(c));
    timed("facet adjacency", t);
    let t = Instant::now();
    let correspondence = correspondence_check(c)?;
    timed("correspondence", t);
    let t = Instant::now();
    let switching = switching_classes()?;
    timed("switching classes", t);
    let t = Instant::now();
    let diameters = diameters(c)?;
    timed("diameters", t);
    let t = Instant::now();
    let simplex_faces = simplex_face_decomposition()?;
    timed("simplex faces", t);
    let t = Instant::now();
    let checks = Checks {
        double_counting_mismatches: double_counting_mismatches(c),
        local_graph_failures: local_graph_failures(c),
    };
    timed("consistency checks", t);
    let completeness = match sweep_bound {
        Some(bound) => {
            let t = Instant::now();
            let r = verify_facet_completeness(c, bound)?;
            timed("completeness sweep", t);
            Some(r)
        }
        None => None,
    };

    Ok(CensusReport {
        version: REPORT_VERSION,
        facet_count: h.len(),
        ray_count: c.len(),
        facet_orbits,
        ray_orbits: c.orbits.clone(),
        subcones,
        incidence,
        ray_adjacency,
        facet_adjacency,
        correspondence,
        switching,
        diameters,
        simplex_faces,
        completeness,
        checks,
        timings,
    })
}

/// A cell where a computed table disagrees with the published one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub table: String,
    pub row: usize,
    pub column: usize,
    pub expected: i64,
    pub found: i64,
}

fn compare(out: &mut Vec<Mismatch>, table: &str, row: usize, column: usize, expected: usize, found: usize) {
    if expected != found {
        out.push(Mismatch {
            table: table.into(),
            row,
            column,
            expected: expected as i64,
            found: found as i64,
        });
    }
}

fn compare_rows<const W: usize>(out: &mut Vec<Mismatch>, table: &str, expected: &[[usize; W]], found: &[Vec<usize>]) {
    compare(out, &format!("{table} rows"), 0, 0, expected.len(), found.len());
    for (i, (e, f)) in expected.iter().zip(found).enumerate() {
        compare(out, &format!("{table} width"), i + 1, 0, W, f.len());
        for (j, (&x, &y)) in e.iter().zip(f).enumerate() {
            compare(out, table, i + 1, j + 1, x, y);
        }
    }
}

fn compare_list(out: &mut Vec<Mismatch>, table: &str, expected: &[usize], found: &[usize]) {
    compare(out, &format!("{table} length"), 0, 0, expected.len(), found.len());
    for (i, (&x, &y)) in expected.iter().zip(found).enumerate() {
        compare(out, table, i + 1, 0, x, y);
    }
}

/// Every disagreement with the published orbit sizes, Tables 2 to 4, the
/// facet/ray correspondence, switching class sizes and diameters.
pub fn diff_expected(r: &CensusReport) -> Vec<Mismatch> {
    let mut out = Vec::new();
    compare(&mut out, "facet count", 0, 0, 3773, r.facet_count);
    compare(&mut out, "ray count", 0, 0, 37170, r.ray_count);
    let facet_sizes: Vec<usize> = r.facet_orbits.iter().map(|o| o.size).collect();
    compare_list(&mut out, "facet orbit sizes", &expected::FACET_ORBIT_SIZES, &facet_sizes);
    let ray_sizes: Vec<usize> = r.ray_orbits.iter().map(|o| o.size).collect();
    compare_list(&mut out, "ray orbit sizes", &expected::RAY_ORBIT_SIZES, &ray_sizes);
    compare_rows(&mut out, "incidence", &expected::INCIDENCE, &r.incidence.rows);
    compare_list(&mut out, "incidence totals", &expected::INCIDENCE_TOTALS, &r.incidence.totals);
    compare_rows(&mut out, "ray adjacency", &expected::RAY_ADJACENCY, &r.ray_adjacency.cut_columns());
    compare_list(&mut out, "ray adjacency totals", &expected::RAY_ADJACENCY_TOTALS, &r.ray_adjacency.totals);
    compare(&mut out, "non-cut rays independent", 0, 0, 1, r.ray_adjacency.non_cut_independent as usize);
    compare_rows(&mut out, "facet adjacency", &expected::FACET_ADJACENCY, &r.facet_adjacency.rows);
    compare_list(&mut out, "facet adjacency totals", &expected::FACET_ADJACENCY_TOTALS, &r.facet_adjacency.totals);
    let pairing: Vec<usize> = r.correspondence.iter().map(|p| p.1).collect();
    let expected_pairing: Vec<usize> = (4..=29).collect();
    compare_list(&mut out, "correspondence", &expected_pairing, &pairing);
    compare_list(&mut out, "switching class sizes", &[3, 4, 7, 7, 5], &r.switching.sizes());
    compare(&mut out, "skeleton diameter", 0, 0, 3, r.diameters.skeleton.value);
    compare(&mut out, "ridge diameter", 0, 0, 3, r.diameters.ridge.value);
    out
}

/// Pretty JSON with keys sorted at every level.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serializes");
    serde_json::to_string_pretty(&v).expect("report serializes")
}

fn table(out: &mut String, title: &str, prefix: &str, rows: &[Vec<usize>], totals: &[usize]) {
    writeln!(out, "{title}").unwrap();
    for (i, (row, t)) in rows.iter().zip(totals).enumerate() {
        write!(out, "  {prefix}{:<3}", i + 1).unwrap();
        for x in row {
            write!(out, " {x:>4}").unwrap();
        }
        writeln!(out, " | {t:>5}").unwrap();
    }
}

/// Plain-text rendering of the report.
pub fn render_text(r: &CensusReport) -> String {
    let mut out = String::new();
    writeln!(out, "facets: {} in {} orbits", r.facet_count, r.facet_orbits.len()).unwrap();
    for o in &r.facet_orbits {
        writeln!(out, "  F_{:<3} |F| = {:>4}  b = {:?}", o.index, o.size, o.b).unwrap();
    }
    writeln!(out, "extreme rays: {} in {} orbits", r.ray_count, r.ray_orbits.len()).unwrap();
    for o in &r.ray_orbits {
        let kind = match (&o.cut, o.subcone) {
            (Some(s), _) => format!("cut {s:?}"),
            (None, Some(i)) => format!("from C_{i}"),
            (None, None) => String::new(),
        };
        writeln!(out, "  R_{:<3} |R| = {:>4}  {:?}  {kind}", o.index, o.size, o.representative.coords()).unwrap();
    }
    table(&mut out, "incidence (R_i x F_j)", "R_", &r.incidence.rows, &r.incidence.totals);
    table(
        &mut out,
        "ray adjacency (R_i x cut orbits)",
        "R_",
        &r.ray_adjacency.cut_columns(),
        &r.ray_adjacency.totals,
    );
    table(&mut out, "facet adjacency (F_i x F_j)", "F_", &r.facet_adjacency.rows, &r.facet_adjacency.totals);
    writeln!(out, "correspondence:").unwrap();
    for (i, k) in &r.correspondence {
        writeln!(out, "  O_{i} <-> R_{k}").unwrap();
    }
    writeln!(out, "switching classes: {:?}", r.switching.classes).unwrap();
    writeln!(
        out,
        "diameters: skeleton {} (witness {:?} / {:?}), ridge {}",
        r.diameters.skeleton.value,
        r.diameters.skeleton.witness.0,
        r.diameters.skeleton.witness.1,
        r.diameters.ridge.value
    )
    .unwrap();
    for w in &r.simplex_faces {
        writeln!(out, "F_{} = triangle {:?} and O_{} member {:?}", w.facet, w.triangle, w.cycle_orbit, w.cycle_facet)
            .unwrap();
    }
    if let Some(c) = &r.completeness {
        writeln!(
            out,
            "completeness (|b_i| <= {}): {} candidates, {} valid, {} facets, complete: {}",
            c.max_abs,
            c.candidates,
            c.valid,
            c.facets.len(),
            c.complete
        )
        .unwrap();
    }
    writeln!(out, "timings (ms):").unwrap();
    for (k, v) in &r.timings {
        writeln!(out, "  {k}: {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Unsorted {
        zebra: u8,
        apple: u8,
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = to_json(&Unsorted { zebra: 1, apple: 2 });
        assert!(s.find("apple").unwrap() < s.find("zebra").unwrap());
    }

    #[test]
    fn table_rendering() {
        let mut out = String::new();
        table(&mut out, "t", "R_", &[vec![1, 2], vec![3, 4]], &[3, 7]);
        assert_eq!(out, "t\n  R_1      1    2 |     3\n  R_2      3    4 |     7\n");
    }
}
