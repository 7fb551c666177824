//! Acceptance criteria, one line each. Runs as a plain binary so every
//! line prints; exits nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lel_core::asymptotics::{
    converge_sweep, integrand, kdim_constant, quad_constant, BranchWeighting, Rule, DEFAULT_LEVELS, DEFAULT_POINTS,
};
use lel_core::audit::{audit_hexagonal, audit_line_family, audit_m3342, printed, ORACLE_TOL, PRINTED_TOL};
use lel_core::graph::edge_delta;
use lel_core::lattice::{self, boundary_chain};
use lel_core::lel::{
    bound_trials, lel_of_graph, perturbation_trials, ratio_convergence, structural_equality, BoundEquality, MARGIN_TOL,
};
use lel_core::spectral::{closed_form_spectrum, numeric_spectrum, spectrum_compare, BranchForm, DEFAULT_CAP};
use lel_core::{Boundary, Diagonal, Family, Graph, LatticeSpec};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_lel")
}

fn default_h(f: Family, w: BranchWeighting) -> f64 {
    quad_constant::<f64>(&integrand(f, w), DEFAULT_POINTS, Rule::Midpoint, DEFAULT_LEVELS).unwrap().constant_h
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let out = Command::new(bin()).args(["constant", "--family", "square", "--format", "json"]).output().unwrap();
    let elapsed = start.elapsed();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let h = v["constant_h"].as_f64().unwrap();
    let k2 = kdim_constant::<f64>(2, DEFAULT_POINTS, DEFAULT_LEVELS).unwrap().constant_h;
    let k1 = kdim_constant::<f64>(1, DEFAULT_POINTS, DEFAULT_LEVELS).unwrap().constant_h;
    let four_over_pi = 4.0 / std::f64::consts::PI;
    let pass = out.status.success()
        && (h - printed::SQUARE).abs() <= PRINTED_TOL
        && elapsed <= Duration::from_secs(10)
        && (k2 - h).abs() <= 1e-4
        && (k1 - four_over_pi).abs() <= 1e-6;
    outcome(
        pass,
        format!(
            "square h = {h:.6} vs {} in {:.2}s; k=2 {k2:.6} (diff {:.1e}); k=1 {k1:.9} vs 4/pi (diff {:.1e})",
            printed::SQUARE,
            elapsed.as_secs_f64(),
            (k2 - h).abs(),
            (k1 - four_over_pi).abs()
        ),
    )
}

fn criterion_2() -> Outcome {
    let a = audit_hexagonal(3, 3, DEFAULT_CAP).unwrap();
    let per_vertex_ok = (a.per_vertex - printed::HEX_PER_VERTEX).abs() <= PRINTED_TOL;
    let audit_ok = a.total_flagged && (a.self_consistent_total - 2.0 * a.per_vertex).abs() < 1e-12;
    outcome(
        per_vertex_ok && audit_ok,
        format!(
            "hex h = {:.6} vs {} (diff {:.4}, tolerance {PRINTED_TOL}: {}); total {} flagged against 2 x {} = {:.4}: {}; self-consistent total {:.4}",
            a.per_vertex,
            printed::HEX_PER_VERTEX,
            (a.per_vertex - printed::HEX_PER_VERTEX).abs(),
            if per_vertex_ok { "ok" } else { "MISSED" },
            printed::HEX_TOTAL,
            printed::HEX_PER_VERTEX,
            a.doubled_printed_per_vertex,
            if audit_ok { "ok" } else { "MISSED" },
            a.self_consistent_total
        ),
    )
}

fn criterion_3() -> Outcome {
    let a = audit_m3342(3, 4, DEFAULT_CAP).unwrap();
    let forward = a.orientations.iter().find(|o| o.diagonal == Diagonal::Forward).unwrap();
    let orientation_ok = a.selected.is_some();
    let h = default_h(Family::M3342, BranchWeighting::default());
    let pass = orientation_ok && (h - printed::M_PER_VERTEX).abs() <= PRINTED_TOL;
    outcome(
        pass,
        format!(
            "orientation {:?} at 3x4, spectrum deviation {:.1e}; M h = {h:.6} vs {}",
            a.selected,
            forward.column_angle.max_abs_deviation,
            printed::M_PER_VERTEX
        ),
    )
}

fn oracle(spec: LatticeSpec) -> f64 {
    let closed = closed_form_spectrum::<f64>(&spec).unwrap();
    let numeric = numeric_spectrum::<f64>(&lattice::build(&spec).unwrap(), DEFAULT_CAP).unwrap();
    spectrum_compare(&closed, &numeric, ORACLE_TOL).unwrap().max_abs_deviation
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    let specs = [
        LatticeSpec::new(Family::Square, Boundary::Torus, 4, 4),
        LatticeSpec::new(Family::Square, Boundary::Cylinder, 4, 4),
        LatticeSpec::new(Family::Square, Boundary::Free, 4, 4),
        LatticeSpec::new(Family::Hexagonal, Boundary::Torus, 3, 3),
        LatticeSpec::new(Family::M3342, Boundary::Torus, 3, 4),
    ];
    for spec in specs {
        let d = oracle(spec);
        pass &= d <= ORACLE_TOL;
        parts.push(format!("{spec} {d:.1e}"));
    }
    for (f, m, n) in [(Family::J31212, 3, 3), (Family::TriangularKagome, 2, 2)] {
        let a = audit_line_family(f, m, n, DEFAULT_CAP).unwrap();
        let adj = a.adjudicated.clone();
        pass &= a.selected == Some(BranchForm::Halved) && a.halved.max_abs_deviation <= ORACLE_TOL && adj.is_some();
        parts.push(format!(
            "{f} {m}x{n} selects {:?} ({:.1e}), h = {:.4} vs printed {}",
            a.selected,
            a.halved.max_abs_deviation,
            adj.map_or(f64::NAN, |c| c.per_vertex),
            a.printed_per_vertex
        ));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let h_sq = printed::SQUARE;
    let r = converge_sweep(Family::Square, &[(16, 16), (32, 32), (64, 64)], &Boundary::ALL, h_sq, DEFAULT_CAP).unwrap();
    let square_close = Boundary::ALL.iter().all(|&b| r.largest(b).unwrap().deviation <= 0.04);
    let square_trend = r.is_trend_monotone();
    let worst = Boundary::ALL.iter().map(|&b| r.largest(b).unwrap().deviation).fold(0.0, f64::max);

    let hex = LatticeSpec::new(Family::Hexagonal, Boundary::Free, 15, 15);
    let g = lattice::build(&hex).unwrap();
    let hex_pv = lel_of_graph::<f64>(&g, DEFAULT_CAP).unwrap().per_vertex;
    let hex_ok = g.n_vertices() == 512 && (hex_pv - printed::HEX_PER_VERTEX).abs() <= 0.05;
    outcome(
        square_close && square_trend && hex_ok,
        format!(
            "square at 64x64 worst deviation {worst:.4} (<= 0.04: {}), trend non-increasing: {}; hex free 15x15 ({} vertices) {hex_pv:.5}, {:.4} from {} (<= 0.05: {})",
            square_close,
            square_trend,
            g.n_vertices(),
            (hex_pv - printed::HEX_PER_VERTEX).abs(),
            printed::HEX_PER_VERTEX,
            hex_ok
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let s = bound_trials(&mut rng, 200, DEFAULT_CAP).unwrap();
    let mut equality_ok = true;
    for n in 2..=12 {
        let k2 = Graph::new(n, [(0, 1)]).unwrap();
        let v = lel_of_graph::<f64>(&k2, DEFAULT_CAP).unwrap();
        equality_ok &= v.equality(MARGIN_TOL) == BoundEquality::Both && structural_equality(&k2) == BoundEquality::Both;
        for r in 2..=n / 2 {
            let matching = Graph::new(n, (0..r).map(|i| (2 * i, 2 * i + 1))).unwrap();
            let v = lel_of_graph::<f64>(&matching, DEFAULT_CAP).unwrap();
            equality_ok &= v.equality(MARGIN_TOL) == BoundEquality::Upper;
        }
    }
    outcome(
        s.passed() && equality_ok,
        format!(
            "{} random graphs, {} violations, worst margin {:.1e}, {} equality cases; K2 and matching equality detection: {}",
            s.trials, s.violations, s.worst_margin, s.equality_cases, equality_ok
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let s = perturbation_trials(&mut rng, 100, DEFAULT_CAP).unwrap();
    let mut pairs = Vec::new();
    for f in Family::ALL {
        for (m, n) in [(3, 4), (5, 5)] {
            let c = boundary_chain(&LatticeSpec::new(f, Boundary::Torus, m, n)).unwrap();
            pairs.push((c.torus.clone(), c.cylinder.clone()));
            pairs.push((c.torus.clone(), c.free.clone()));
            pairs.push((c.cylinder, c.free));
        }
    }
    let deltas: usize = pairs.iter().map(|(g, h)| edge_delta(g, h).count()).sum();
    let ratio = ratio_convergence::<f64>(&pairs, DEFAULT_CAP);
    let ratio_ok = ratio.as_ref().is_ok_and(|rows| rows.iter().all(|r| r.holds()));
    outcome(
        s.passed() && s.worst_margin >= -MARGIN_TOL && ratio_ok,
        format!(
            "{} trials, {} violations, worst margin {:.1e}; ratio bound on {} boundary-chain pairs (total delta {deltas}): {}",
            s.trials,
            s.violations,
            s.worst_margin,
            pairs.len(),
            if ratio_ok { "holds".to_owned() } else { format!("{:?}", ratio.err()) }
        ),
    )
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> Vec<u8> {
    let path: PathBuf = dir.join(name);
    let status = Command::new(bin()).args(args).arg("--out").arg(&path).status().unwrap();
    assert!(status.success(), "{args:?}");
    std::fs::read(&path).unwrap()
}

fn criterion_8() -> Outcome {
    let dir = std::env::temp_dir().join(format!("lel-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let configs: [&[&str]; 8] = [
        &["build", "--family", "tkl", "--boundary", "free", "--m", "3", "--n", "3"],
        &["spectrum", "--family", "j312", "--m", "2", "--n", "2", "--source", "both"],
        &["spectrum", "--family", "hex", "--boundary", "cyl", "--m", "3", "--n", "4", "--format", "json"],
        &["lel", "--family", "m3342", "--boundary", "free", "--m", "3", "--n", "4", "--format", "json"],
        &["constant", "--family", "j312", "--grid", "256", "--format", "json"],
        &["converge", "--family", "hex", "--sizes", "3x3,5x5", "--format", "csv"],
        &["audit", "--family", "m3342", "--format", "json"],
        &["perturb", "--seed", "11", "--trials", "30", "--format", "json"],
    ];
    let mut identical = 0;
    for (k, args) in configs.iter().enumerate() {
        let a = run_to(&dir, &format!("a{k}"), args);
        let b = run_to(&dir, &format!("b{k}"), args);
        if a == b && !a.is_empty() {
            identical += 1;
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    outcome(
        identical == configs.len(),
        format!("{identical}/{} configurations byte-identical across runs", configs.len()),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 square constant", criterion_1),
        ("2 hexagonal constant", criterion_2),
        ("3 M constant", criterion_3),
        ("4 oracle equivalence", criterion_4),
        ("5 boundary independence", criterion_5),
        ("6 edge-count bounds", criterion_6),
        ("7 perturbation inequality", criterion_7),
        ("8 determinism", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
