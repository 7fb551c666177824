//! Tensor-product quadrature over the unit square (or cube) with Richardson
//! extrapolation.
//!
//! The densities are periodic with conical zeros, so the midpoint error
//! expands in odd powers starting at `h^(d+1)` for a `d`-dimensional grid:
//! `h^3, h^5, ...` in 2D, `h^2, h^4, ...` in 1D.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{pairwise_sum, Scalar};

use super::integrand::Integrand;

pub const DEFAULT_POINTS: usize = 1024;
pub const DEFAULT_LEVELS: usize = 3;
/// Budget on integrand evaluations for the finest `kdim` grid.
pub const KDIM_MAX_EVALUATIONS: usize = 100_000_000;

/// Gauss–Legendre nodes per panel in the composite Gauss rule.
const GAUSS_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// Composite midpoint, nodes at `(k + 1/2)/N`.
    #[default]
    Midpoint,
    /// Composite 4-point Gauss–Legendre on `N/4` panels per axis.
    Gauss,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Midpoint => "midpoint",
            Rule::Gauss => "gauss",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "midpoint" => Ok(Rule::Midpoint),
            "gauss" => Ok(Rule::Gauss),
            _ => Err(Error::InvalidGrid(format!("unknown rule `{s}` (expected midpoint or gauss)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    pub constant_h: T,
    /// Largest of the last Richardson correction, the change between the
    /// two finest extrapolated levels and the change between the two finest
    /// raw levels.
    pub error_estimate: T,
    pub grid_points_per_axis: usize,
    pub rule: Rule,
    /// Extrapolation columns used; 0 for plain level differences.
    pub richardson_levels: usize,
    /// Raw rule values from coarsest to finest grid.
    pub level_values: Vec<T>,
}

fn check_grid(points: usize, levels: usize, min_coarsest: usize) -> Result<()> {
    if points < 8 || !points.is_power_of_two() {
        return Err(Error::InvalidGrid(format!("points per axis must be a power of two >= 8, got {points}")));
    }
    if levels < 2 {
        return Err(Error::InvalidGrid(format!("need at least 2 levels, got {levels}")));
    }
    if levels > 1 + points.trailing_zeros() as usize || (points >> (levels - 1)) < min_coarsest {
        return Err(Error::InvalidGrid(format!("{levels} levels is too many for {points} points per axis")));
    }
    Ok(())
}

/// Product-rule average of `f` over `[0,1]²`: nodes `(k + offset)/N` with
/// equal weights. `offset = 1/2` is the midpoint rule, `offset = 0` the
/// rectangle rule whose nodes are the torus momenta `2πk/N`.
pub fn rectangle_average<T: Scalar>(f: &Integrand, points: usize, offset: T) -> T {
    let n = T::of_usize(points);
    let nodes: Vec<T> = (0..points).map(|k| (T::of_usize(k) + offset) / n).collect();
    let mut row = vec![T::zero(); points];
    let rows: Vec<T> = nodes
        .iter()
        .map(|&y| {
            for (slot, &x) in row.iter_mut().zip(&nodes) {
                *slot = f.eval(x, y);
            }
            pairwise_sum(&row)
        })
        .collect();
    pairwise_sum(&rows) / (n * n)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration on
/// `P_order`.
pub fn gauss_legendre<T: Scalar>(order: usize) -> Vec<(T, T)> {
    let mut out = Vec::with_capacity(order);
    let nf = T::of_usize(order);
    for i in 0..order {
        let mut x = (T::PI() * (T::of_usize(i) + T::of(0.75)) / (nf + T::of(0.5))).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (mut p0, mut p1) = (T::one(), x);
            for k in 2..=order {
                let kf = T::of_usize(k);
                let p2 = ((T::of(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if order == 0 { T::one() } else { p1 };
            dp = nf * (x * p - p0) / (x * x - T::one());
            let step = p / dp;
            x = x - step;
            if step.abs() <= T::epsilon() * T::of(4.0) {
                break;
            }
        }
        let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
        out.push((x, w));
    }
    out
}

fn gauss_average<T: Scalar>(f: &Integrand, points: usize) -> T {
    let panels = points / GAUSS_ORDER;
    let rule = gauss_legendre::<T>(GAUSS_ORDER);
    let h = T::one() / T::of_usize(panels);
    let half = T::of(0.5);
    let nodes: Vec<(T, T)> = (0..panels)
        .flat_map(|p| {
            let left = T::of_usize(p) * h;
            rule.iter().map(move |&(x, w)| (left + half * h * (x + T::one()), half * h * w))
        })
        .collect();
    let mut row = vec![T::zero(); nodes.len()];
    let rows: Vec<T> = nodes
        .iter()
        .map(|&(y, wy)| {
            for (slot, &(x, wx)) in row.iter_mut().zip(&nodes) {
                *slot = wx * f.eval(x, y);
            }
            wy * pairwise_sum(&row)
        })
        .collect();
    pairwise_sum(&rows)
}

/// Richardson table on values from coarsest to finest (grid halving between
/// levels), eliminating `h^first, h^(first+2), ...`. Returns the finest
/// extrapolated value and the error estimate.
pub fn richardson<T: Scalar>(levels: &[T], first_exponent: i32) -> (T, T) {
    let mut table: Vec<Vec<T>> = vec![levels.to_vec()];
    for k in 1..levels.len() {
        let prev = &table[k - 1];
        let factor = T::of(2.0).powi(first_exponent + 2 * (k as i32 - 1)) - T::one();
        let col = prev.windows(2).map(|w| w[1] + (w[1] - w[0]) / factor).collect();
        table.push(col);
    }
    let last = table.len() - 1;
    let best = table[last][0];
    let correction = (best - *table[last - 1].last().unwrap()).abs();
    let diagonal_change = if last >= 1 && table[last - 1].len() >= 2 {
        let prev_col = &table[last - 1];
        (best - prev_col[prev_col.len() - 2]).abs()
    } else {
        correction
    };
    (best, correction.max(diagonal_change))
}

fn finest_change<T: Scalar>(levels: &[T]) -> T {
    (levels[levels.len() - 1] - levels[levels.len() - 2]).abs()
}

/// Per-vertex asymptotic constant `∫∫ f` on a grid of `points` per axis,
/// with `levels` grids obtained by halving.
pub fn quad_constant<T: Scalar>(
    f: &Integrand,
    points: usize,
    rule: Rule,
    levels: usize,
) -> Result<QuadratureResult<T>> {
    let min_coarsest = match rule {
        Rule::Midpoint => 2,
        Rule::Gauss => GAUSS_ORDER,
    };
    check_grid(points, levels, min_coarsest)?;
    let level_values: Vec<T> = (0..levels)
        .rev()
        .map(|k| {
            let n = points >> k;
            match rule {
                Rule::Midpoint => rectangle_average(f, n, T::of(0.5)),
                Rule::Gauss => gauss_average(f, n),
            }
        })
        .collect();
    let (constant_h, error_estimate, richardson_levels) = match rule {
        Rule::Midpoint => {
            let (h, e) = richardson(&level_values, 3);
            (h, e.max(finest_change(&level_values)), levels - 1)
        }
        Rule::Gauss => (level_values[levels - 1], finest_change(&level_values), 0),
    };
    Ok(QuadratureResult {
        constant_h,
        error_estimate,
        grid_points_per_axis: points,
        rule,
        richardson_levels,
        level_values,
    })
}

/// Midpoint average of `sqrt(Σ_i (2 - 2cos 2πx_i))` over `[0,1]^k`.
fn kdim_average<T: Scalar>(k: usize, points: usize) -> T {
    let n = T::of_usize(points);
    let table: Vec<T> =
        (0..points).map(|i| T::of(2.0) - T::of(2.0) * (T::TAU() * (T::of_usize(i) + T::of(0.5)) / n).cos()).collect();
    fn nested<T: Scalar>(table: &[T], depth: usize, partial: T) -> T {
        if depth == 1 {
            let row: Vec<T> = table.iter().map(|&t| (partial + t).sqrt()).collect();
            return pairwise_sum(&row);
        }
        let sums: Vec<T> = table.iter().map(|&t| nested(table, depth - 1, partial + t)).collect();
        pairwise_sum(&sums)
    }
    nested(&table, k, T::zero()) / n.powi(k as i32)
}

/// Largest power of two `N <= requested` with `N^k` within the evaluation
/// budget.
pub fn kdim_points(k: usize, requested: usize) -> usize {
    let mut n = requested.next_power_of_two().min(requested.max(1));
    if !n.is_power_of_two() {
        n = n.next_power_of_two() / 2;
    }
    while n > 8 && n.checked_pow(k as u32).is_none_or(|total| total > KDIM_MAX_EVALUATIONS) {
        n /= 2;
    }
    n
}

/// `(2π)^-k ∫ sqrt(Σ (2 - 2cos x_i)) dx` over `[0, 2π]^k`, `1 <= k <= 4`.
pub fn kdim_constant<T: Scalar>(k: usize, points: usize, levels: usize) -> Result<QuadratureResult<T>> {
    if !(1..=4).contains(&k) {
        return Err(Error::InvalidGrid(format!("dimension must be in 1..=4, got {k}")));
    }
    let points = kdim_points(k, points);
    check_grid(points, levels, 2)?;
    let level_values: Vec<T> = (0..levels).rev().map(|l| kdim_average(k, points >> l)).collect();
    let (constant_h, estimate) = richardson(&level_values, k as i32 + 1);
    let error_estimate = estimate.max(finest_change(&level_values));
    Ok(QuadratureResult {
        constant_h,
        error_estimate,
        grid_points_per_axis: points,
        rule: Rule::Midpoint,
        richardson_levels: levels - 1,
        level_values,
    })
}
