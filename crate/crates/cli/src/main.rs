//! `lel`: build lattices, compute Laplacian spectra and LEL, evaluate the
//! asymptotic constants and run the audit and property checks.

mod output;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use lel_core::asymptotics::{
    converge_sweep, integrand, kdim_constant, quad_constant, BranchWeighting, Rule, DEFAULT_LEVELS, DEFAULT_POINTS,
    TREND_SLACK,
};
use lel_core::audit::{self, sites_per_cell};
use lel_core::lattice::{self, boundary_chain};
use lel_core::lel::{self as lelmod, bound_trials, perturbation_trials, ratio_convergence};
use lel_core::report::{round_json, sig};
use lel_core::spectral::{
    closed_form_spectrum, has_closed_form, numeric_spectrum_of, spectrum_compare, Subject, DEFAULT_CAP,
};
use lel_core::{Boundary, Diagonal, Family, Graph, LatticeSpec};

use output::{emit, json_text, OutputError};

const EXIT_FAILURE: u8 = 1;
const EXIT_CHECK_FAILED: u8 = 3;
const EXIT_OUTPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "lel", version, about = "Laplacian spectra and LEL of lattice graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a lattice instance.
    Build(BuildArgs),
    /// Laplacian eigenvalues, closed form, numeric or both.
    Spectrum(SpectrumArgs),
    /// LEL, per-vertex LEL and the edge-count bounds.
    Lel(LelArgs),
    /// Asymptotic per-vertex constant of a family by quadrature.
    Constant(ConstantArgs),
    /// Constant of the k-dimensional hypercubic lattice.
    Kdim(KdimArgs),
    /// Per-vertex LEL across sizes and boundaries against the constant.
    Converge(ConvergeArgs),
    /// Check closed forms against the eigensolver and recompute constants.
    Audit(AuditArgs),
    /// Seeded randomized checks of the LEL inequalities.
    Perturb(PerturbArgs),
}

#[derive(Args, Clone)]
struct SpecArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_parser = parse_boundary, default_value = "torus")]
    boundary: Boundary,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Diagonal orientation of the 3^3.4^2 lattice.
    #[arg(long, value_enum, default_value_t = DiagonalArg::Forward)]
    diagonal: DiagonalArg,
}

impl SpecArgs {
    fn spec(&self) -> Result<LatticeSpec> {
        let spec = LatticeSpec::new(self.family, self.boundary, self.m, self.n);
        spec.validate()?;
        Ok(spec)
    }

    fn graph(&self) -> Result<Graph> {
        Ok(lattice::build_with_diagonal(&self.spec()?, self.diagonal.into())?)
    }
}

#[derive(Args)]
struct OutArgs {
    /// Output file, written atomically; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value_t = SourceArg::Auto)]
    source: SourceArg,
    /// Agreement required when comparing closed form and numeric spectra.
    #[arg(long, default_value_t = 1e-8)]
    tolerance: f64,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct LelArgs {
    #[arg(long, value_parser = parse_family, required_unless_present = "graph")]
    family: Option<Family>,
    #[arg(long, value_parser = parse_boundary, default_value = "torus")]
    boundary: Boundary,
    #[arg(long, required_unless_present = "graph")]
    m: Option<usize>,
    #[arg(long, required_unless_present = "graph")]
    n: Option<usize>,
    /// Edge-list file instead of a lattice.
    #[arg(long, conflicts_with_all = ["family", "m", "n"])]
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = SourceArg::Auto)]
    source: SourceArg,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct QuadArgs {
    /// Points per axis on the finest grid.
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    grid: usize,
    #[arg(long, value_enum, default_value_t = RuleArg::Midpoint)]
    rule: RuleArg,
    /// Number of grids, each half the size of the next.
    #[arg(long, default_value_t = DEFAULT_LEVELS)]
    levels: usize,
}

#[derive(Args)]
struct ConstantArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[command(flatten)]
    quad: QuadArgs,
    #[arg(long, value_enum, default_value_t = WeightingArg::SpectrumDerived)]
    weighting: WeightingArg,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct KdimArgs {
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Comma-separated `MxN` sizes; a default sweep per family when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_size)]
    sizes: Vec<(usize, usize)>,
    /// Boundaries to include; all three when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_boundary)]
    boundary: Vec<Boundary>,
    #[command(flatten)]
    quad: QuadArgs,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct AuditArgs {
    /// Family to audit; all five when omitted.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    m: Option<usize>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct PerturbArgs {
    #[arg(long, value_enum, default_value_t = CheckArg::Perturbation)]
    check: CheckArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Edgelist,
    Gnuplot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    /// Closed form when one exists, numeric otherwise.
    Auto,
    Closed,
    Numeric,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Midpoint,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightingArg {
    SpectrumDerived,
    Published,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagonalArg {
    Forward,
    Mirrored,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    /// Edge-deletion inequality on random graph/subgraph pairs.
    Perturbation,
    /// Edge-count bounds on random graphs.
    Bounds,
    /// Ratio bound on torus/cylinder/free pairs of every family.
    Ratio,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Midpoint => Rule::Midpoint,
            RuleArg::Gauss => Rule::Gauss,
        }
    }
}

impl From<WeightingArg> for BranchWeighting {
    fn from(w: WeightingArg) -> Self {
        match w {
            WeightingArg::SpectrumDerived => BranchWeighting::SpectrumDerived,
            WeightingArg::Published => BranchWeighting::Published,
        }
    }
}

impl From<DiagonalArg> for Diagonal {
    fn from(d: DiagonalArg) -> Self {
        match d {
            DiagonalArg::Forward => Diagonal::Forward,
            DiagonalArg::Mirrored => Diagonal::Mirrored,
        }
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: lel_core::Error| e.to_string())
}

fn parse_boundary(s: &str) -> std::result::Result<Boundary, String> {
    s.parse().map_err(|e: lel_core::Error| e.to_string())
}

fn parse_size(s: &str) -> std::result::Result<(usize, usize), String> {
    let (m, n) = s.split_once('x').ok_or_else(|| format!("size `{s}` is not of the form MxN"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad size component `{t}` in `{s}`"));
    Ok((num(m)?, num(n)?))
}

/// A check ran to completion and failed.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn format_or(out: &OutArgs, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = out.format.unwrap_or(default);
    if !allowed.contains(&f) {
        let names: Vec<_> =
            allowed.iter().map(|a| a.to_possible_value().expect("named").get_name().to_owned()).collect();
        bail!(
            "format `{}` is not available here (expected {})",
            f.to_possible_value().expect("named").get_name(),
            names.join(", ")
        );
    }
    Ok(f)
}

fn run_build(a: &BuildArgs) -> Result<()> {
    format_or(&a.out, Format::Edgelist, &[Format::Edgelist])?;
    emit(a.out.out.as_deref(), &a.spec.graph()?.to_edge_list())
}

fn run_spectrum(a: &SpectrumArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Csv, &[Format::Csv, Format::Json])?;
    let spec = a.spec.spec()?;
    let numeric = || -> Result<_> { Ok(numeric_spectrum_of::<f64>(&a.spec.graph()?, a.cap, Subject::Lattice(spec))?) };
    let single = match a.source {
        SourceArg::Auto if has_closed_form(&spec) => Some(closed_form_spectrum::<f64>(&spec)?),
        SourceArg::Closed => Some(closed_form_spectrum::<f64>(&spec)?),
        SourceArg::Auto | SourceArg::Numeric => Some(numeric()?),
        SourceArg::Both => None,
    };
    if let Some(s) = single {
        let text = match format {
            Format::Json => json_text(&s.to_json(a.tolerance)?),
            _ => s.to_csv()?,
        };
        return emit(a.out.out.as_deref(), &text);
    }

    let closed = closed_form_spectrum::<f64>(&spec)?;
    let num = numeric()?;
    let cmp = spectrum_compare(&closed, &num, a.tolerance)?;
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "spec": spec,
                "closed_form": closed.values(),
                "numeric": num.values(),
                "comparison": cmp,
            });
            round_json(&mut v)?;
            json_text(&v)
        }
        _ => {
            let mut s = String::from("index,closed_form,numeric,deviation\n");
            for (i, (c, n)) in closed.values().iter().zip(num.values()).enumerate() {
                writeln!(s, "{i},{},{},{}", sig(*c), sig(*n), sig((c - n).abs()))?;
            }
            s
        }
    };
    emit(a.out.out.as_deref(), &text)?;
    if !cmp.pass {
        return Err(CheckFailed(format!(
            "closed form and eigensolver differ by {} at index {} (tolerance {})",
            sig(cmp.max_abs_deviation),
            cmp.index,
            sig(a.tolerance)
        ))
        .into());
    }
    Ok(())
}

fn run_lel(a: &LelArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Text, &[Format::Text, Format::Json])?;
    let (label, g, spec) = match &a.graph {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).with_context(|| format!("cannot read graph file {}", path.display()))?;
            (path.display().to_string(), Graph::from_edge_list(&text)?, None)
        }
        None => {
            let spec = LatticeSpec::new(
                a.family.expect("required by clap"),
                a.boundary,
                a.m.expect("required by clap"),
                a.n.expect("required by clap"),
            );
            spec.validate()?;
            (spec.to_string(), lattice::build(&spec)?, Some(spec))
        }
    };
    let closed = match (a.source, spec) {
        (SourceArg::Closed, Some(_)) => true,
        (SourceArg::Auto, Some(s)) => has_closed_form(&s),
        (SourceArg::Closed, None) => bail!("no closed form for an edge-list graph"),
        (SourceArg::Both, _) => bail!("`--source both` applies to the spectrum command"),
        _ => false,
    };
    let v = if closed {
        let s = spec.expect("lattice");
        let value = lelmod::lel(&closed_form_spectrum::<f64>(&s)?)?;
        lelmod::LelValue { n_edges: g.n_edges(), ..value }
    } else {
        lelmod::lel_of_graph::<f64>(&g, a.cap)?
    };
    v.check_bounds()?;
    let (lo, hi) = v.bounds();
    let text = match format {
        Format::Json => {
            let mut j = json!({
                "graph": label,
                "source": if closed { "closed_form" } else { "numeric" },
                "vertices": v.n_vertices,
                "edges": v.n_edges,
                "lel": v.value,
                "per_vertex": v.per_vertex,
                "lower_bound": lo,
                "upper_bound": hi,
                "margins": { "lower": v.value - lo, "upper": hi - v.value },
                "equality": v.equality(lelmod::MARGIN_TOL),
            });
            round_json(&mut j)?;
            json_text(&j)
        }
        _ => format!(
            "graph       {label}\nvertices    {}\nedges       {}\nLEL         {:.4}\nper vertex  {:.4}\nbounds      {:.4} <= LEL <= {:.4}\n",
            v.n_vertices, v.n_edges, v.value, v.per_vertex, lo, hi
        ),
    };
    emit(a.out.out.as_deref(), &text)
}

fn run_constant(a: &ConstantArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Text, &[Format::Text, Format::Json])?;
    let f = integrand(a.family, a.weighting.into());
    let r = quad_constant::<f64>(&f, a.quad.grid, a.quad.rule.into(), a.quad.levels)?;
    let total = sites_per_cell(a.family) as f64 * r.constant_h;
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "family": a.family,
                "integrand": f.description(),
                "constant_h": r.constant_h,
                "total_per_cell": total,
                "error_estimate": r.error_estimate,
                "grid_points_per_axis": r.grid_points_per_axis,
                "rule": r.rule,
                "richardson_levels": r.richardson_levels,
                "level_values": r.level_values,
            });
            round_json(&mut v)?;
            json_text(&v)
        }
        _ => format!(
            "{} h = {:.4} (error estimate {:.1e}, {} rule, {} points per axis)\nper cell: {:.4}\n",
            a.family, r.constant_h, r.error_estimate, r.rule, r.grid_points_per_axis, total
        ),
    };
    emit(a.out.out.as_deref(), &text)
}

fn run_kdim(a: &KdimArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Text, &[Format::Text, Format::Json])?;
    if !matches!(a.quad.rule, RuleArg::Midpoint) {
        bail!("kdim supports only the midpoint rule");
    }
    let r = kdim_constant::<f64>(a.k, a.quad.grid, a.quad.levels)?;
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "k": a.k,
                "constant_h": r.constant_h,
                "error_estimate": r.error_estimate,
                "grid_points_per_axis": r.grid_points_per_axis,
                "rule": r.rule,
                "richardson_levels": r.richardson_levels,
            });
            round_json(&mut v)?;
            json_text(&v)
        }
        _ => format!(
            "k = {} h = {:.4} (error estimate {:.1e}, {} points per axis)\n",
            a.k, r.constant_h, r.error_estimate, r.grid_points_per_axis
        ),
    };
    emit(a.out.out.as_deref(), &text)
}

fn default_sizes(f: Family) -> Vec<(usize, usize)> {
    match f {
        Family::Square => vec![(16, 16), (32, 32), (64, 64)],
        Family::Hexagonal => vec![(3, 3), (7, 7), (15, 15)],
        Family::J31212 => vec![(2, 2), (4, 4), (7, 7)],
        Family::TriangularKagome => vec![(2, 2), (4, 4), (6, 6)],
        Family::M3342 => vec![(4, 4), (8, 8), (16, 16)],
    }
}

fn run_converge(a: &ConvergeArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Csv, &[Format::Csv, Format::Json, Format::Gnuplot])?;
    let sizes = if a.sizes.is_empty() { default_sizes(a.family) } else { a.sizes.clone() };
    let boundaries = if a.boundary.is_empty() { Boundary::ALL.to_vec() } else { a.boundary.clone() };
    for &(m, n) in &sizes {
        for &b in &boundaries {
            let spec = LatticeSpec::new(a.family, b, m, n);
            spec.validate()?;
            if !has_closed_form(&spec) && spec.vertex_count() > a.cap {
                return Err(lel_core::Error::Capacity { n_vertices: spec.vertex_count(), cap: a.cap }.into());
            }
        }
    }
    let h = quad_constant::<f64>(
        &integrand(a.family, BranchWeighting::default()),
        a.quad.grid,
        a.quad.rule.into(),
        a.quad.levels,
    )?
    .constant_h;
    let report = converge_sweep(a.family, &sizes, &boundaries, h, a.cap)?;
    let text = match format {
        Format::Json => json_text(&report.to_json()?),
        Format::Gnuplot => report.to_gnuplot()?,
        _ => report.to_csv()?,
    };
    emit(a.out.out.as_deref(), &text)?;
    let bad = report.trend_violations(TREND_SLACK);
    if !bad.is_empty() {
        let names: Vec<_> = bad.iter().map(|b| b.to_string()).collect();
        return Err(CheckFailed(format!(
            "deviation grows by more than {TREND_SLACK}x between sizes for {}",
            names.join(", ")
        ))
        .into());
    }
    Ok(())
}

fn run_audit(a: &AuditArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Text, &[Format::Text, Format::Json])?;
    let families = match a.family {
        Some(f) => vec![f],
        None => Family::ALL.to_vec(),
    };
    let audits = families
        .iter()
        .map(|&f| {
            let (dm, dn) = audit::default_size(f);
            audit::audit(f, a.m.unwrap_or(dm), a.n.unwrap_or(dn), a.cap)
        })
        .collect::<lel_core::Result<Vec<_>>>()?;
    let text = match format {
        Format::Json => {
            let items = audits.iter().map(|x| x.to_json()).collect::<lel_core::Result<Vec<_>>>()?;
            json_text(&serde_json::Value::Array(items))
        }
        _ => audits.iter().map(|x| x.summary()).collect::<Vec<_>>().join(""),
    };
    emit(a.out.out.as_deref(), &text)?;
    let failed: Vec<_> = audits.iter().filter(|x| !x.oracle_consistent()).map(|x| x.family().to_string()).collect();
    if !failed.is_empty() {
        return Err(CheckFailed(format!("closed form disagrees with the eigensolver for {}", failed.join(", "))).into());
    }
    Ok(())
}

fn ratio_pairs() -> Result<Vec<(String, Graph, Graph)>> {
    let mut pairs = Vec::new();
    for f in Family::ALL {
        let spec = LatticeSpec::new(f, Boundary::Torus, 3, 4);
        let c = boundary_chain(&spec)?;
        for (name, g, h) in [
            ("torus/cyl", &c.torus, &c.cylinder),
            ("torus/free", &c.torus, &c.free),
            ("cyl/free", &c.cylinder, &c.free),
        ] {
            pairs.push((format!("{f} {name}"), g.clone(), h.clone()));
        }
    }
    Ok(pairs)
}

fn run_perturb(a: &PerturbArgs) -> Result<()> {
    let format = format_or(&a.out, Format::Text, &[Format::Text, Format::Json])?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let (value, failure) = match a.check {
        CheckArg::Perturbation | CheckArg::Bounds => {
            let s = match a.check {
                CheckArg::Bounds => bound_trials(&mut rng, a.trials, a.cap)?,
                _ => perturbation_trials(&mut rng, a.trials, a.cap)?,
            };
            let failure =
                (!s.passed()).then(|| format!("{} of {} trials violate the inequality", s.violations, s.trials));
            (serde_json::to_value(s)?, failure)
        }
        CheckArg::Ratio => {
            let labelled = ratio_pairs()?;
            let pairs: Vec<_> = labelled.iter().map(|(_, g, h)| (g.clone(), h.clone())).collect();
            let rows = ratio_convergence::<f64>(&pairs, a.cap)?;
            let rows: Vec<_> = labelled
                .iter()
                .zip(&rows)
                .map(|((label, _, _), r)| {
                    json!({
                        "pair": label,
                        "delta": r.delta,
                        "lel_ratio": r.lel_ratio,
                        "bound": r.bound,
                        "holds": r.holds(),
                    })
                })
                .collect();
            (json!({ "pairs": rows.len(), "rows": rows }), None)
        }
    };
    let mut value =
        json!({ "check": a.check.to_possible_value().expect("named").get_name(), "seed": a.seed, "result": value });
    round_json(&mut value)?;
    let text = match format {
        Format::Json => json_text(&value),
        _ => perturb_summary(&value),
    };
    emit(a.out.out.as_deref(), &text)?;
    match failure {
        Some(msg) => Err(CheckFailed(msg).into()),
        None => Ok(()),
    }
}

fn perturb_summary(v: &serde_json::Value) -> String {
    let r = &v["result"];
    if let Some(rows) = r["rows"].as_array() {
        let mut s = String::new();
        for row in rows {
            let ratio = row["lel_ratio"].as_f64().unwrap_or(f64::NAN);
            let bound = row["bound"].as_f64().unwrap_or(f64::NAN);
            let _ = writeln!(
                s,
                "{:<18} delta {:>3}  |ratio - 1| {:.4} <= {:.4}",
                row["pair"].as_str().unwrap_or(""),
                row["delta"],
                (ratio - 1.0).abs(),
                bound
            );
        }
        return s;
    }
    format!(
        "{} check, seed {}: {} trials, {} violations, worst margin {:.1e}, {} equality cases\n",
        v["check"].as_str().unwrap_or(""),
        v["seed"],
        r["trials"],
        r["violations"],
        r["worst_margin"].as_f64().unwrap_or(f64::NAN),
        r["equality_cases"],
    )
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Build(a) => run_build(a),
        Command::Spectrum(a) => run_spectrum(a),
        Command::Lel(a) => run_lel(a),
        Command::Constant(a) => run_constant(a),
        Command::Kdim(a) => run_kdim(a),
        Command::Converge(a) => run_converge(a),
        Command::Audit(a) => run_audit(a),
        Command::Perturb(a) => run_perturb(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.is::<OutputError>() {
                EXIT_OUTPUT
            } else if e.is::<CheckFailed>()
                || matches!(
                    e.downcast_ref::<lel_core::Error>(),
                    Some(lel_core::Error::InvariantViolation(_) | lel_core::Error::Consistency(_))
                )
            {
                EXIT_CHECK_FAILED
            } else {
                EXIT_FAILURE
            };
            ExitCode::from(code)
        }
    }
}
