use std::process::{Command, Output};

use approx::assert_abs_diff_eq;

fn lel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lel")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(&lel(args))).unwrap()
}

#[test]
fn c4_lel() {
    let v = json(&["lel", "--family", "square", "--boundary", "free", "--m", "2", "--n", "2", "--format", "json"]);
    assert_abs_diff_eq!(v["lel"].as_f64().unwrap(), 2.0 + 2.0 * 2f64.sqrt(), epsilon = 1e-11);
    assert_eq!(v["edges"], 4);
    assert_eq!(v["source"], "closed_form");
    let text = stdout(&lel(&["lel", "--family", "square", "--boundary", "free", "--m", "2", "--n", "2"]));
    assert!(text.contains("LEL         4.8284"));
}

#[test]
fn lel_numeric_and_closed_agree() {
    let args = ["lel", "--family", "hex", "--m", "3", "--n", "3", "--format", "json"];
    let closed = json(&args)["lel"].as_f64().unwrap();
    let mut numeric_args = args.to_vec();
    numeric_args.extend(["--source", "numeric"]);
    let numeric = json(&numeric_args)["lel"].as_f64().unwrap();
    assert_abs_diff_eq!(closed, numeric, epsilon = 1e-9);
}

#[test]
fn lel_from_edge_list_file() {
    let dir = std::env::temp_dir().join(format!("lel-cli-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("star.txt");
    std::fs::write(&path, "n 4\n0 1\n0 2\n0 3\n").unwrap();
    let v = json(&["lel", "--graph", path.to_str().unwrap(), "--format", "json"]);
    // Star K_{1,3}: eigenvalues 4, 1, 1, 0.
    assert_abs_diff_eq!(v["lel"].as_f64().unwrap(), 4.0, epsilon = 1e-11);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn build_round_trips_edge_list() {
    let text = stdout(&lel(&["build", "--family", "j312", "--m", "2", "--n", "2"]));
    let g = lel_core::Graph::from_edge_list(&text).unwrap();
    assert_eq!(g.n_vertices(), 54);
    assert_eq!(g.regularity(), Some(3));
}

#[test]
fn spectrum_csv_and_comparison() {
    let csv = stdout(&lel(&["spectrum", "--family", "square", "--m", "3", "--n", "3"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("index,eigenvalue"));
    assert_eq!(lines.next(), Some("0,6"));
    assert_eq!(csv.lines().count(), 10);
    assert!(csv.ends_with("8,0\n"));

    let both = stdout(&lel(&["spectrum", "--family", "tkl", "--m", "2", "--n", "2", "--source", "both"]));
    assert!(both.starts_with("index,closed_form,numeric,deviation\n"));
    assert_eq!(both.lines().count(), 82);

    let v = json(&["spectrum", "--family", "m3342", "--m", "3", "--n", "4", "--source", "both", "--format", "json"]);
    assert_eq!(v["comparison"]["pass"], true);
}

#[test]
fn spectrum_without_closed_form() {
    let o = lel(&["spectrum", "--family", "hex", "--boundary", "free", "--m", "2", "--n", "2", "--source", "closed"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no closed-form spectrum"));
    let auto = stdout(&lel(&["spectrum", "--family", "hex", "--boundary", "free", "--m", "2", "--n", "2"]));
    assert_eq!(auto.lines().count(), 19);
}

#[test]
fn constant_and_kdim() {
    let v = json(&["constant", "--family", "m3342", "--format", "json"]);
    assert_abs_diff_eq!(v["constant_h"].as_f64().unwrap(), 2.1525, epsilon = 5e-4);
    assert_eq!(v["grid_points_per_axis"], 1024);
    assert_eq!(v["richardson_levels"], 2);
    let p = json(&["constant", "--family", "tkl", "--weighting", "published", "--format", "json"]);
    assert_abs_diff_eq!(p["constant_h"].as_f64().unwrap(), 1.7082, epsilon = 5e-4);
    let g = json(&["constant", "--family", "hex", "--rule", "gauss", "--levels", "2", "--format", "json"]);
    assert_abs_diff_eq!(g["constant_h"].as_f64().unwrap(), 1.635_695_212_8, epsilon = 1e-9);
    let k = json(&["kdim", "--k", "4", "--format", "json"]);
    assert_eq!(k["grid_points_per_axis"], 64);
    let o = lel(&["kdim", "--k", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dimension must be in 1..=4"));
    let o = lel(&["constant", "--family", "square", "--grid", "100"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("power of two"));
}

#[test]
fn converge_formats() {
    let args = ["converge", "--family", "square", "--sizes", "8x8,16x16", "--boundary", "torus,free"];
    let csv = stdout(&lel(&args));
    assert!(csv.starts_with("m,n,boundary,per_vertex,deviation\n8,8,torus,"));
    assert_eq!(csv.lines().count(), 5);
    let mut plot_args = args.to_vec();
    plot_args.extend(["--format", "gnuplot"]);
    let plot = stdout(&lel(&plot_args));
    assert!(plot.contains("# index 0: torus") && plot.contains("# index 1: free"));
}

#[test]
fn converge_over_cap() {
    let o = lel(&["converge", "--family", "j312", "--sizes", "9x9", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("above the eigensolver cap"));
}

#[test]
fn audit_reports() {
    let v = json(&["audit", "--family", "j312", "--m", "4", "--n", "4", "--format", "json"]);
    let a = &v[0];
    assert_eq!(a["selected"], "halved");
    assert!(a["halved"]["max_abs_deviation"].as_f64().unwrap() <= 1e-8);
    assert_eq!(a["oracle_consistent"], true);
    let text = stdout(&lel(&["audit", "--family", "hex"]));
    assert!(text.contains("inconsistent with 2 x 1.6437 = 3.2874"));
}

#[test]
fn perturb_checks() {
    let v = json(&["perturb", "--seed", "3", "--trials", "40", "--format", "json"]);
    assert_eq!(v["result"]["violations"], 0);
    assert_eq!(v["result"]["trials"], 40);
    let b = json(&["perturb", "--check", "bounds", "--seed", "3", "--trials", "40", "--format", "json"]);
    assert_eq!(b["result"]["violations"], 0);
    let r = json(&["perturb", "--check", "ratio", "--format", "json"]);
    assert_eq!(r["result"]["pairs"], 15);
    assert!(r["result"]["rows"].as_array().unwrap().iter().all(|row| row["holds"] == true));
    let other = json(&["perturb", "--seed", "4", "--trials", "40", "--format", "json"]);
    assert_ne!(v, other);
}

#[test]
fn distinct_errors() {
    let unknown_family = lel(&["lel", "--family", "penrose", "--m", "3", "--n", "3"]);
    assert_eq!(unknown_family.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown_family.stderr).contains("unknown lattice family"));

    let unknown_boundary = lel(&["lel", "--family", "hex", "--boundary", "mobius", "--m", "3", "--n", "3"]);
    assert_eq!(unknown_boundary.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown_boundary.stderr).contains("unknown boundary"));

    let too_small = lel(&["lel", "--family", "m3342", "--m", "1", "--n", "3"]);
    assert_eq!(too_small.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&too_small.stderr).contains("needs m >= 2"));

    let bad_format = lel(&["build", "--family", "hex", "--m", "2", "--n", "2", "--format", "json"]);
    assert_eq!(bad_format.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_format.stderr).contains("not available"));

    let unwritable = lel(&["build", "--family", "hex", "--m", "2", "--n", "2", "--out", "/nonexistent-dir/g.txt"]);
    assert_eq!(unwritable.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&unwritable.stderr).contains("cannot write output file"));
}

#[test]
fn atomic_output_leaves_no_temp_file() {
    let dir = std::env::temp_dir().join(format!("lel-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("edges.txt");
    std::fs::write(&path, "stale").unwrap();
    let o = lel(&["build", "--family", "square", "--m", "3", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("n 9\n"));
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
