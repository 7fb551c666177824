//! The Laplacian-energy-like invariant `LEL(G) = Σ sqrt(μ_k)`, its
//! edge-count bounds, the edge-deletion inequality and the ratio bound for
//! pairs of graphs that differ in few edges.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::scalar::{pairwise_sum, Scalar};
use crate::spectral::{numeric_spectrum, Spectrum};

/// Slack for the inequality checks, which compare sums of square roots.
pub const MARGIN_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LelValue<T> {
    pub value: T,
    pub per_vertex: T,
    pub n_vertices: usize,
    pub n_edges: usize,
}

/// Sums the square roots of the clamped spectrum. The zero eigenvalue adds
/// nothing, so summing all values agrees with skipping the smallest one.
/// The edge count is recovered from the trace, which equals `2|E|`.
pub fn lel<T: Scalar>(spectrum: &Spectrum<T>) -> Result<LelValue<T>> {
    let clamped = spectrum.clamped()?;
    let roots: Vec<T> = clamped.iter().map(|v| v.sqrt()).collect();
    let value = pairwise_sum(&roots);
    let n = spectrum.len();
    let per_vertex = if n == 0 { T::zero() } else { value / T::of_usize(n) };
    let n_edges = (pairwise_sum(&clamped).as_f64() / 2.0).round() as usize;
    Ok(LelValue { value, per_vertex, n_vertices: n, n_edges })
}

/// LEL of a graph through the dense eigensolver.
pub fn lel_of_graph<T: Scalar>(g: &Graph, cap: usize) -> Result<LelValue<T>> {
    if g.n_vertices() == 0 {
        return Ok(LelValue { value: T::zero(), per_vertex: T::zero(), n_vertices: 0, n_edges: 0 });
    }
    let v = lel(&numeric_spectrum::<T>(g, cap)?)?;
    Ok(LelValue { n_edges: g.n_edges(), ..v })
}

/// `(sqrt(2m), sqrt(2)·m)` for a graph with `m` edges.
pub fn lel_bounds<T: Scalar>(n_edges: usize) -> (T, T) {
    let m = T::of_usize(n_edges);
    ((T::of(2.0) * m).sqrt(), T::SQRT_2() * m)
}

/// Which side(s) of the edge-count sandwich are attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundEquality {
    None,
    Lower,
    Upper,
    Both,
}

impl<T: Scalar> LelValue<T> {
    pub fn bounds(&self) -> (T, T) {
        lel_bounds(self.n_edges)
    }

    /// Fails when `LEL` leaves `[sqrt(2m), sqrt(2)·m]` or reaches `2m`.
    pub fn check_bounds(&self) -> Result<()> {
        let (lo, hi) = self.bounds();
        let tol = T::of(MARGIN_TOL) * (T::one() + hi);
        if self.value < lo - tol || self.value > hi + tol {
            return Err(Error::InvariantViolation(format!(
                "LEL {} outside [{lo}, {hi}] for {} edges",
                self.value, self.n_edges
            )));
        }
        if self.n_edges > 0 && self.value >= T::of_usize(2 * self.n_edges) {
            return Err(Error::InvariantViolation(format!("LEL {} is not below 2m", self.value)));
        }
        Ok(())
    }

    pub fn equality(&self, tol: T) -> BoundEquality {
        let (lo, hi) = self.bounds();
        match ((self.value - lo).abs() <= tol, (self.value - hi).abs() <= tol) {
            (true, true) => BoundEquality::Both,
            (true, false) => BoundEquality::Lower,
            (false, true) => BoundEquality::Upper,
            (false, false) => BoundEquality::None,
        }
    }
}

/// The extremal graphs: the lower bound is attained exactly by the empty
/// graph and `K2 ∪ (n-2)K1`, the upper one by matchings `rK2 ∪ (n-2r)K1`.
pub fn structural_equality(g: &Graph) -> BoundEquality {
    let lower = g.n_edges() <= 1;
    let upper = g.degrees().iter().all(|&d| d <= 1);
    match (lower, upper) {
        (true, true) => BoundEquality::Both,
        (true, false) => BoundEquality::Lower,
        (false, true) => BoundEquality::Upper,
        (false, false) => BoundEquality::None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PerturbationReport<T> {
    pub lel_g: LelValue<T>,
    pub lel_h: LelValue<T>,
    pub lel_diff_graph: LelValue<T>,
    /// `LEL(G - E(H)) - |LEL(G) - LEL(H)|`
    pub left_margin: T,
    /// `LEL(G) + LEL(H) - LEL(G - E(H))`
    pub right_margin: T,
}

impl<T: Scalar> PerturbationReport<T> {
    pub fn holds(&self) -> bool {
        let tol = -T::of(MARGIN_TOL);
        self.left_margin >= tol && self.right_margin >= tol
    }
}

/// Evaluates `|LEL(G) - LEL(H)| <= LEL(G - E(H)) <= LEL(G) + LEL(H)` for a
/// spanning subgraph `h` of `g`, all through numeric spectra.
pub fn check_perturbation<T: Scalar>(g: &Graph, h: &Graph, cap: usize) -> Result<PerturbationReport<T>> {
    if !h.is_spanning_subgraph_of(g) {
        return Err(Error::NotSubgraph("h must share g's vertex set and use only edges of g".into()));
    }
    let diff = graph::delete_edges(g, h.edges())?;
    let lel_g = lel_of_graph::<T>(g, cap)?;
    let lel_h = lel_of_graph::<T>(h, cap)?;
    let lel_diff_graph = lel_of_graph::<T>(&diff, cap)?;
    Ok(PerturbationReport {
        left_margin: lel_diff_graph.value - (lel_g.value - lel_h.value).abs(),
        right_margin: lel_g.value + lel_h.value - lel_diff_graph.value,
        lel_g,
        lel_h,
        lel_diff_graph,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioRow<T> {
    pub delta: usize,
    pub lel_g: T,
    pub lel_h: T,
    /// `Δ(G, H) / LEL(G)`
    pub delta_ratio: T,
    /// `LEL(H) / LEL(G)`
    pub lel_ratio: T,
    /// `2Δ(G, H) / LEL(G)`, an upper bound on `|lel_ratio - 1|`.
    pub bound: T,
}

impl<T: Scalar> RatioRow<T> {
    pub fn holds(&self) -> bool {
        (self.lel_ratio - T::one()).abs() <= self.bound + T::of(MARGIN_TOL)
    }
}

/// One row per `(g, h)` pair on aligned index spaces. Fails if any row breaks
/// `|LEL(h)/LEL(g) - 1| <= 2Δ/LEL(g)`.
pub fn ratio_convergence<T: Scalar>(pairs: &[(Graph, Graph)], cap: usize) -> Result<Vec<RatioRow<T>>> {
    pairs
        .iter()
        .map(|(g, h)| {
            if g.n_vertices() != h.n_vertices() {
                return Err(Error::ShapeMismatch(g.n_vertices(), h.n_vertices()));
            }
            let lg = lel_of_graph::<T>(g, cap)?.value;
            if lg <= T::zero() {
                return Err(Error::DegenerateLel);
            }
            let lh = lel_of_graph::<T>(h, cap)?.value;
            let delta = graph::edge_delta(g, h).count();
            let d = T::of_usize(delta);
            let row = RatioRow {
                delta,
                lel_g: lg,
                lel_h: lh,
                delta_ratio: d / lg,
                lel_ratio: lh / lg,
                bound: T::of(2.0) * d / lg,
            };
            if !row.holds() {
                return Err(Error::InvariantViolation(format!(
                    "|{} - 1| exceeds 2Δ/LEL = {}",
                    row.lel_ratio, row.bound
                )));
            }
            Ok(row)
        })
        .collect()
}

/// Outcome of a batch of randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialSummary {
    pub trials: usize,
    pub violations: usize,
    /// Smallest margin seen; negative beyond `-MARGIN_TOL` means a violation.
    pub worst_margin: f64,
    /// Trials whose graph attains a bound.
    pub equality_cases: usize,
}

impl TrialSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Largest graph order drawn by the randomized trials.
pub const TRIAL_MAX_VERTICES: usize = 30;

fn random_order_and_density<R: Rng + ?Sized>(rng: &mut R) -> (usize, f64) {
    (rng.random_range(1..=TRIAL_MAX_VERTICES), rng.random_range(0.0..=1.0))
}

/// `sqrt(2m) <= LEL <= sqrt(2)·m` on `G(n, p)` samples with random `n` and
/// `p`. A trial also fails when numeric equality detection disagrees with
/// the structural characterization of the extremal graphs.
pub fn bound_trials<R: Rng + ?Sized>(rng: &mut R, trials: usize, cap: usize) -> Result<TrialSummary> {
    let mut summary = TrialSummary { trials, violations: 0, worst_margin: f64::INFINITY, equality_cases: 0 };
    for _ in 0..trials {
        let (n, p) = random_order_and_density(rng);
        let g = graph::gnp(n, p, rng);
        let v = lel_of_graph::<f64>(&g, cap)?;
        let (lo, hi) = v.bounds();
        summary.worst_margin = summary.worst_margin.min(v.value - lo).min(hi - v.value);
        let detected = v.equality(MARGIN_TOL);
        if detected != BoundEquality::None {
            summary.equality_cases += 1;
        }
        if v.check_bounds().is_err() || detected != structural_equality(&g) {
            summary.violations += 1;
        }
    }
    Ok(summary)
}

/// The edge-deletion inequality on random `(G, H)` pairs, `H` a random
/// spanning subgraph of `G`.
pub fn perturbation_trials<R: Rng + ?Sized>(rng: &mut R, trials: usize, cap: usize) -> Result<TrialSummary> {
    let mut summary = TrialSummary { trials, violations: 0, worst_margin: f64::INFINITY, equality_cases: 0 };
    for _ in 0..trials {
        let (n, p) = random_order_and_density(rng);
        let g = graph::gnp(n, p, rng);
        let keep = rng.random_range(0.0..=1.0);
        let h = graph::random_spanning_subgraph(&g, keep, rng);
        let r = check_perturbation::<f64>(&g, &h, cap)?;
        summary.worst_margin = summary.worst_margin.min(r.left_margin).min(r.right_margin);
        if r.left_margin.abs() <= MARGIN_TOL || r.right_margin.abs() <= MARGIN_TOL {
            summary.equality_cases += 1;
        }
        if !r.holds() {
            summary.violations += 1;
        }
    }
    Ok(summary)
}
