//! Finite-size per-vertex LEL across sizes and boundary conditions.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, Boundary, Family, LatticeSpec};
use crate::lel::lel;
use crate::report::{check_finite, round_json, sig};
use crate::scalar::Scalar;
use crate::spectral::{closed_form_spectrum, has_closed_form, numeric_spectrum_of, Spectrum, Subject};

/// Allowed growth of a deviation from one size to the next.
pub const TREND_SLACK: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow<T> {
    pub m: usize,
    pub n: usize,
    pub boundary: Boundary,
    pub n_vertices: usize,
    pub per_vertex: T,
    pub deviation: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport<T> {
    pub family: Family,
    pub constant_h: T,
    /// Sorted by vertex count, then boundary.
    pub rows: Vec<ConvergenceRow<T>>,
}

/// Spectrum of a lattice instance, closed form when one exists.
pub fn lattice_spectrum<T: Scalar>(spec: &LatticeSpec, cap: usize) -> Result<Spectrum<T>> {
    spec.validate()?;
    if has_closed_form(spec) {
        return closed_form_spectrum(spec);
    }
    if spec.vertex_count() > cap {
        return Err(Error::Capacity { n_vertices: spec.vertex_count(), cap });
    }
    numeric_spectrum_of(&lattice::build(spec)?, cap, Subject::Lattice(*spec))
}

pub fn converge_sweep<T: Scalar>(
    family: Family,
    sizes: &[(usize, usize)],
    boundaries: &[Boundary],
    constant_h: T,
    cap: usize,
) -> Result<ConvergenceReport<T>> {
    let mut rows = Vec::with_capacity(sizes.len() * boundaries.len());
    for &(m, n) in sizes {
        for &boundary in boundaries {
            let spec = LatticeSpec::new(family, boundary, m, n);
            let per_vertex = lel(&lattice_spectrum::<T>(&spec, cap)?)?.per_vertex;
            rows.push(ConvergenceRow {
                m,
                n,
                boundary,
                n_vertices: spec.vertex_count(),
                per_vertex,
                deviation: (per_vertex - constant_h).abs(),
            });
        }
    }
    rows.sort_by_key(|r| (r.n_vertices, r.m, r.boundary));
    Ok(ConvergenceReport { family, constant_h, rows })
}

impl<T: Scalar> ConvergenceReport<T> {
    pub fn boundary_rows(&self, boundary: Boundary) -> impl Iterator<Item = &ConvergenceRow<T>> {
        self.rows.iter().filter(move |r| r.boundary == boundary)
    }

    pub fn boundaries(&self) -> Vec<Boundary> {
        Boundary::ALL.into_iter().filter(|&b| self.boundary_rows(b).next().is_some()).collect()
    }

    /// Boundaries whose deviation grows by more than `slack` between
    /// consecutive sizes.
    pub fn trend_violations(&self, slack: f64) -> Vec<Boundary> {
        self.boundaries()
            .into_iter()
            .filter(|&b| {
                let devs: Vec<f64> = self.boundary_rows(b).map(|r| r.deviation.as_f64()).collect();
                devs.windows(2).any(|w| w[1] > slack * w[0])
            })
            .collect()
    }

    pub fn is_trend_monotone(&self) -> bool {
        self.trend_violations(TREND_SLACK).is_empty()
    }

    /// Per size, the largest minus the smallest per-vertex value across
    /// boundaries.
    pub fn boundary_spread(&self) -> Vec<((usize, usize), T)> {
        let mut sizes: Vec<(usize, usize)> = self.rows.iter().map(|r| (r.m, r.n)).collect();
        sizes.dedup();
        sizes
            .into_iter()
            .map(|size| {
                let vals = self.rows.iter().filter(|q| (q.m, q.n) == size).map(|q| q.per_vertex);
                let (lo, hi) = vals.fold((T::infinity(), T::neg_infinity()), |(lo, hi), v| (lo.min(v), hi.max(v)));
                (size, hi - lo)
            })
            .collect()
    }

    pub fn largest(&self, boundary: Boundary) -> Option<&ConvergenceRow<T>> {
        self.boundary_rows(boundary).last()
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::from("m,n,boundary,per_vertex,deviation\n");
        for r in &self.rows {
            check_finite("per-vertex LEL", r.per_vertex.as_f64())?;
            writeln!(
                out,
                "{},{},{},{},{}",
                r.m,
                r.n,
                r.boundary,
                sig(r.per_vertex.as_f64()),
                sig(r.deviation.as_f64())
            )
            .expect("writing to a String");
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "m": r.m,
                    "n": r.n,
                    "boundary": r.boundary,
                    "n_vertices": r.n_vertices,
                    "per_vertex": r.per_vertex.as_f64(),
                    "deviation": r.deviation.as_f64(),
                })
            })
            .collect();
        let mut v = serde_json::json!({
            "family": self.family,
            "constant_h": self.constant_h.as_f64(),
            "trend_monotone": self.is_trend_monotone(),
            "rows": rows,
        });
        round_json(&mut v)?;
        Ok(v)
    }

    /// One block per boundary, `n_vertices deviation`, blocks separated by
    /// two blank lines for gnuplot's `index`.
    pub fn to_gnuplot(&self) -> Result<String> {
        let mut out = format!("# {} deviation from h = {}\n", self.family, sig(self.constant_h.as_f64()));
        for (k, b) in self.boundaries().into_iter().enumerate() {
            if k > 0 {
                out.push_str("\n\n");
            }
            writeln!(out, "# index {k}: {b}").expect("writing to a String");
            for r in self.boundary_rows(b) {
                check_finite("deviation", r.deviation.as_f64())?;
                writeln!(out, "{} {}", r.n_vertices, sig(r.deviation.as_f64())).expect("writing to a String");
            }
        }
        Ok(out)
    }
}
