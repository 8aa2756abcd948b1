//! The `HYP_7` census: subcone decomposition, ray and facet orbit tables,
//! incidence, adjacency, switching classes and diameters.

mod analysis;
mod bits;
mod census;
pub mod expected;
mod hyp7;
mod report;
mod subcone;

pub use analysis::{
    classify, diameters, simplex_face_decomposition, switching_classes, verify_facet_completeness, Completeness,
    DiameterReport, Diameters, SimplexFaceWitness, SwitchingClasses, SIMPLEX_FACE_PAIRS,
};
pub use bits::Bits;
pub use census::{
    assemble_census, correspondence_check, cuts_form_clique, double_counting_mismatches, facet_adjacency_table,
    incidence_table, local_graph_failures, ray_adjacency_table, run_census, Census, RayAdjacency, RayOrbit,
};
pub use hyp7::{build_hyp7, hyp7, known_rays, Hyp7, KnownRays};
pub use report::{census_report, diff_expected, render_text, to_json, CensusReport, Mismatch, REPORT_VERSION};
pub use subcone::{simplex_rays, solve_subcone, solve_subcone_unpruned, subcone, SubconeResult, SUBCONE_COUNT};
