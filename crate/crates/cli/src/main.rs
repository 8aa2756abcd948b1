use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypcone::cones::{is_extreme_ray, tight_set, HCone, VCone};
use hypcone::hypermetric::{generate_cuts, generate_hyp, generate_met};
use hypcone::io::{parse_cone, parse_inequality, parse_ray, read_file, write_hcone, write_vcone, Cone};
use hypcone::pipeline::{
    census_report, diff_expected, hyp7, known_rays, render_text, run_census, solve_subcone, solve_subcone_unpruned,
    switching_classes, to_json, Census, CensusReport, Mismatch,
};
use hypcone::symmetry::OrbitTable;
use hypcone::Error;

#[derive(Parser)]
#[command(name = "hypcone", version, about = "Exact computations on hypermetric, cut and metric cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for the parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hyp,
    Met,
    Cut,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the facets of HYP_n or MET_n, or the cuts of CUT_n, as a cone file.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Partition the rows of a cone file into Sym(n)-orbits.
    Orbits {
        #[arg(long, alias = "input")]
        file: PathBuf,
    },
    /// Reduce the subcone C_i of HYP_7 and extract its rays.
    Subcone {
        /// Index i of the non-hypermetric facet orbit O_i (1..=26).
        #[arg(long)]
        index: usize,
        /// Probe every inequality instead of one per stabilizer orbit.
        #[arg(long)]
        unpruned: bool,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Full extreme-ray census of HYP_7 with all tables.
    Census {
        /// Compare with the published tables; exit 1 on any difference.
        #[arg(long)]
        expected: bool,
        /// Include the facet completeness sweep.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Incidence and adjacency tables of HYP_7.
    Tables {
        #[arg(long)]
        expected: bool,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Diameters of the skeleton and ridge graph of HYP_7.
    Diameters {
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Run every consistency check, including the completeness sweep.
    Verify {
        /// Entry bound of the completeness sweep.
        #[arg(long, default_value_t = 3)]
        max_abs: i64,
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Switching classes of the non-hypermetric facets of CUT_7.
    SwitchClasses,
    /// Is the vector in the file an extreme ray of HYP_7?
    CheckRay {
        #[arg(long, alias = "input")]
        file: PathBuf,
    },
    /// Is the inequality in the file a facet of HYP_7?
    CheckFacet {
        #[arg(long, alias = "input")]
        file: PathBuf,
    },
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Assertion(_)
            | Error::NotExtreme
            | Error::NotFacet
            | Error::EmptySlice
            | Error::Overflow(_)
            | Error::GroupNotClosed
            | Error::NotPointed { .. }
            | Error::Disconnected => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn require_seven(n: usize) -> Result<(), Failure> {
    if n != 7 {
        return Err(Failure::Usage(format!("this command supports only n = 7 (got {n})")));
    }
    Ok(())
}

fn census() -> Result<Census, Failure> {
    Ok(run_census()?)
}

fn mismatch_text(ms: &[Mismatch]) -> String {
    let mut out = String::new();
    if ms.is_empty() {
        out.push_str("expected: all published values match\n");
    }
    for m in ms {
        writeln!(
            out,
            "MISMATCH {} [{}, {}]: expected {}, found {}",
            m.table, m.row, m.column, m.expected, m.found
        )
        .unwrap();
    }
    out
}

fn hcone_json(family: &str, c: &HCone) -> Value {
    let table = OrbitTable::partition(
        &c.inequalities().iter().map(|f| f.coeffs().to_vec()).collect::<Vec<_>>(),
        c.points(),
    )
    .ok();
    json!({
        "family": family,
        "kind": "H",
        "n": c.points(),
        "dim": c.dim(),
        "count": c.len(),
        "vectors": c.inequalities().iter().map(|f| f.coeffs()).collect::<Vec<_>>(),
        "orbit_sizes": table.map(|t| t.sizes),
    })
}

fn vcone_json(family: &str, c: &VCone) -> Value {
    json!({
        "family": family,
        "kind": "V",
        "n": c.points(),
        "dim": c.dim(),
        "count": c.len(),
        "vectors": c.rays().iter().map(|r| r.coords()).collect::<Vec<_>>(),
    })
}

fn generate(family: Family, n: usize) -> Result<Outcome, Failure> {
    Ok(match family {
        Family::Hyp => {
            let c = generate_hyp(n)?;
            Outcome::ok(write_hcone(&c), hcone_json("hyp", &c))
        }
        Family::Met => {
            let c = generate_met(n)?;
            Outcome::ok(write_hcone(&c), hcone_json("met", &c))
        }
        Family::Cut => {
            let c = generate_cuts(n)?;
            Outcome::ok(write_vcone(&c), vcone_json("cut", &c))
        }
    })
}

fn orbits(file: &PathBuf) -> Result<Outcome, Failure> {
    let cone = parse_cone(&read_file(file)?)?;
    let (n, rows): (usize, Vec<Vec<i64>>) = match &cone {
        Cone::H(c) => (c.points(), c.inequalities().iter().map(|f| f.coeffs().to_vec()).collect()),
        Cone::V(c) => (c.points(), c.rays().iter().map(|r| r.coords().to_vec()).collect()),
    };
    let table = OrbitTable::partition(&rows, n)?;
    let mut counts = vec![0; table.orbit_count()];
    for &o in &table.member_orbit {
        counts[o] += 1;
    }
    let mut text = format!("{} rows in {} orbits\n", rows.len(), table.orbit_count());
    for (k, c) in table.canonical.iter().enumerate() {
        writeln!(text, "orbit {}: size {}, present {}, canonical {:?}", k + 1, table.sizes[k], counts[k], c).unwrap();
    }
    let json = json!({ "orbits": table, "present": counts });
    Ok(Outcome::ok(text, json))
}

fn subcone(index: usize, unpruned: bool) -> Result<Outcome, Failure> {
    if !(1..=26).contains(&index) {
        return Err(Failure::Usage(format!("--index must be in 1..=26 (got {index})")));
    }
    let r = if unpruned { solve_subcone_unpruned(index)? } else { solve_subcone(index)? };
    let mut text = format!(
        "C_{}: {} facets, {} rays ({} cuts), stabilizer order {}, {} probes, {} pivots, {} ms\n",
        r.orbit,
        r.facets.len(),
        r.rays.len(),
        r.rays.len() - 1,
        r.stabilizer_order,
        r.probes,
        r.pivots,
        r.millis
    );
    writeln!(text, "non-cut ray: {:?}", r.non_cut.coords()).unwrap();
    for f in &r.facets {
        writeln!(text, "facet: {f}").unwrap();
    }
    Ok(Outcome::ok(text, serde_json::to_value(&r).expect("serializable")))
}

fn report_outcome(r: &CensusReport, expected: bool) -> Outcome {
    let mut text = render_text(r);
    let mut ok = true;
    let mut json = serde_json::to_value(r).expect("serializable");
    if expected {
        let ms = diff_expected(r);
        ok = ms.is_empty();
        text.push_str(&mismatch_text(&ms));
        json["mismatches"] = serde_json::to_value(&ms).expect("serializable");
    }
    Outcome { text, json, ok }
}

fn tables(expected: bool) -> Result<Outcome, Failure> {
    let c = census()?;
    let r = census_report(&c, None)?;
    let full = report_outcome(&r, expected);
    let mut text = String::new();
    let keep = ["incidence", "ray adjacency", "facet adjacency"];
    let mut on = false;
    for line in full.text.lines() {
        if !line.starts_with(' ') {
            on = keep.iter().any(|k| line.starts_with(k));
        }
        if on || line.starts_with("MISMATCH") || line.starts_with("expected:") {
            writeln!(text, "{line}").unwrap();
        }
    }
    let mut json = json!({
        "version": r.version,
        "incidence": r.incidence,
        "ray_adjacency": r.ray_adjacency,
        "facet_adjacency": r.facet_adjacency,
    });
    if let Some(ms) = full.json.get("mismatches") {
        json["mismatches"] = ms.clone();
    }
    Ok(Outcome { text, json, ok: full.ok })
}

fn diameters_cmd() -> Result<Outcome, Failure> {
    let c = census()?;
    let d = hypcone::pipeline::diameters(&c)?;
    let text = format!(
        "skeleton diameter: {}\n  witness: {:?}\n           {:?}\n  non-cut pair with disjoint neighborhoods: {}\n  cuts pairwise adjacent: {}\nridge diameter: {}\n  witness: {:?}\n           {:?}\n",
        d.skeleton.value,
        d.skeleton.witness.0,
        d.skeleton.witness.1,
        d.skeleton_witness_disjoint,
        d.cuts_complete,
        d.ridge.value,
        d.ridge.witness.0,
        d.ridge.witness.1
    );
    Ok(Outcome::ok(text, serde_json::to_value(&d).expect("serializable")))
}

fn verify(max_abs: i64) -> Result<Outcome, Failure> {
    let c = census()?;
    let r = census_report(&c, Some(max_abs))?;
    let ms = diff_expected(&r);
    let completeness = r.completeness.as_ref().expect("sweep requested");
    let checks: Vec<(&str, bool)> = vec![
        ("published tables", ms.is_empty()),
        ("double counting", r.checks.double_counting_mismatches.is_empty()),
        ("local graphs K_20", r.checks.local_graph_failures.is_empty()),
        ("non-cut rays pairwise non-adjacent", r.ray_adjacency.non_cut_independent),
        ("cuts pairwise adjacent", r.diameters.cuts_complete),
        ("skeleton distance-3 witness", r.diameters.skeleton_witness_disjoint),
        ("switching labels", r.switching.labels_reproduced),
        ("switching closed on the 26 orbits", r.switching.outside == 0),
        ("facet completeness", completeness.complete),
    ];
    let mut text = String::new();
    for (name, pass) in &checks {
        writeln!(text, "{}: {name}", if *pass { "PASS" } else { "FAIL" }).unwrap();
    }
    text.push_str(&mismatch_text(&ms));
    let ok = checks.iter().all(|c| c.1);
    let json = json!({
        "checks": checks.iter().map(|(k, v)| (k.to_string(), Value::Bool(*v))).collect::<serde_json::Map<_, _>>(),
        "mismatches": ms,
        "report": r,
    });
    Ok(Outcome { text, json, ok })
}

fn switch_classes() -> Result<Outcome, Failure> {
    let s = switching_classes()?;
    let mut text = format!("{} switching classes\n", s.classes.len());
    for class in &s.classes {
        let names: Vec<String> = class.iter().map(|i| format!("O_{i}")).collect();
        writeln!(text, "  {}", names.join(" ")).unwrap();
    }
    writeln!(text, "switches tried: {}, leaving the 26 orbits: {}", s.switches, s.outside).unwrap();
    writeln!(text, "table labels reproduced: {}", s.labels_reproduced).unwrap();
    Ok(Outcome::ok(text, serde_json::to_value(&s).expect("serializable")))
}

fn check_ray(file: &PathBuf) -> Result<Outcome, Failure> {
    let r = parse_ray(&read_file(file)?)?;
    if r.dim() != 21 {
        return Err(Failure::Usage(format!("expected a vector of length 21, found {}", r.dim())));
    }
    let h = &hyp7().cone;
    let in_cone = h.contains(&r)?;
    let (extreme, tight) = if in_cone {
        (is_extreme_ray(h, &r)?, tight_set(h, &r)?.len())
    } else {
        (false, 0)
    };
    let orbit = known_rays().orbit_of(&r).filter(|_| extreme);
    let orbit_name = match orbit {
        Some(k) if k < 3 => "cut".to_string(),
        Some(k) => format!("R_{}", k + 1),
        None => "none".to_string(),
    };
    let mut text = format!("extreme: {extreme}, orbit: {orbit_name}, tight facets: {tight}\n");
    if let Some(k) = orbit {
        writeln!(text, "ray orbit: R_{}", k + 1).unwrap();
    }
    if !in_cone {
        text.push_str("not in HYP_7\n");
    }
    let json = json!({
        "in_cone": in_cone,
        "extreme": extreme,
        "orbit": orbit_name,
        "ray_orbit": orbit.map(|k| k + 1),
        "tight_facets": tight,
    });
    Ok(Outcome::ok(text, json))
}

fn check_facet(file: &PathBuf) -> Result<Outcome, Failure> {
    let f = parse_inequality(&read_file(file)?)?;
    if f.dim() != 21 {
        return Err(Failure::Usage(format!("expected an inequality of length 21, found {}", f.dim())));
    }
    let rays = &known_rays().cone;
    let f = f.to_le();
    let violated = rays.rays().iter().filter(|r| !f.is_satisfied_by(r).unwrap()).count();
    let incident: Vec<&[i64]> = rays
        .rays()
        .iter()
        .filter(|r| hypcone::cones::evaluate(&f, r).unwrap() == 0)
        .map(|r| r.coords())
        .collect();
    let valid = violated == 0;
    let facet = valid && hypcone::linalg::rank_i64(incident.iter().copied(), 21, None) == 20;
    let h = hyp7();
    let orbit = h.index_of(f.coeffs()).map(|k| h.orbit_of[k] + 1).filter(|_| facet);
    let orbit_name = orbit.map_or("none".to_string(), |j| format!("F_{j}"));
    let text = format!(
        "valid: {valid}, facet: {facet}, orbit: {orbit_name}, incident rays: {}, violating rays: {violated}\n",
        incident.len()
    );
    let json = json!({
        "valid": valid,
        "facet": facet,
        "orbit": orbit,
        "incident_rays": incident.len(),
        "violating_rays": violated,
    });
    Ok(Outcome::ok(text, json))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    match &cli.command {
        Command::Generate { family, n } => generate(*family, *n),
        Command::Orbits { file } => orbits(file),
        Command::Subcone { index, unpruned, n } => {
            require_seven(*n)?;
            subcone(*index, *unpruned)
        }
        Command::Census { expected, sweep, n } => {
            require_seven(*n)?;
            let c = census()?;
            let r = census_report(&c, sweep.then_some(3))?;
            Ok(report_outcome(&r, *expected))
        }
        Command::Tables { expected, n } => {
            require_seven(*n)?;
            tables(*expected)
        }
        Command::Diameters { n } => {
            require_seven(*n)?;
            diameters_cmd()
        }
        Command::Verify { max_abs, n } => {
            require_seven(*n)?;
            if *max_abs < 1 {
                return Err(Failure::Usage("--max-abs must be positive".into()));
            }
            verify(*max_abs)
        }
        Command::SwitchClasses => switch_classes(),
        Command::CheckRay { file } => check_ray(file),
        Command::CheckFacet { file } => check_facet(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let body = match cli.format {
                Format::Text => outcome.text,
                Format::Json => to_json(&outcome.json) + "\n",
            };
            let written = match &cli.output {
                Some(path) => std::fs::write(path, body),
                None => {
                    print!("{body}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
