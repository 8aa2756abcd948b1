use std::path::PathBuf;
use std::process::{Command, Output};

fn hypcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypcone")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypcone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn generate_met3_has_three_rows() {
    let o = hypcone(&["generate", "met", "--n", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3 3 3 H"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn generate_json_reports_orbit_sizes() {
    let o = hypcone(&["generate", "hyp", "--n", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 40);
    assert_eq!(v["orbit_sizes"], serde_json::json!([30, 10]));
}

#[test]
fn generated_file_round_trips_through_orbits() {
    let dir = std::env::temp_dir().join(format!("hypcone-cli-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cut5.txt");
    let o = hypcone(&["generate", "cut", "--n", "5", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let o = hypcone(&["orbits", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("15 rows in 2 orbits"));
}

#[test]
fn cut_vector_is_an_extreme_ray() {
    let p = scratch("cut.txt", "1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
    let o = hypcone(&["check-ray", "--file", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("extreme: true, orbit: cut, tight facets: 1460"));
}

#[test]
fn non_facet_hypermetric_is_rejected() {
    // b = (2, 2, -1, -1, -1, 0, 0)
    let b = [2i64, 2, -1, -1, -1, 0, 0];
    let mut row = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            row.push((b[i] * b[j]).to_string());
        }
    }
    let p = scratch("b22.txt", &format!("{} <= 0\n", row.join(" ")));
    let o = hypcone(&["check-facet", "--file", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("valid: true, facet: false"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hypcone(&["bogus"]).status.code(), Some(2));
    assert_eq!(hypcone(&["subcone", "--index", "1", "--n", "6"]).status.code(), Some(2));
    assert_eq!(hypcone(&["subcone", "--index", "27"]).status.code(), Some(2));
    let p = scratch("bad.txt", "1 2 x\n");
    let o = hypcone(&["check-ray", "--file", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn switch_classes_have_published_sizes() {
    let o = hypcone(&["switch-classes", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let sizes: Vec<usize> = v["classes"].as_array().unwrap().iter().map(|c| c.as_array().unwrap().len()).collect();
    assert_eq!(sizes, [3, 4, 7, 7, 5]);
    assert_eq!(v["labels_reproduced"], true);
}
