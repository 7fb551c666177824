//! Laplacian spectra: closed forms for the lattice families and a dense
//! Jacobi eigensolver used as the ground-truth oracle.

mod closed_form;
pub mod jacobi;

use serde::Serialize;

pub use closed_form::{
    closed_form_spectrum, has_closed_form, honeycomb_modulus, line_family, m3342 as m3342_eigenvalues, BranchForm,
    GridAngles, MDiagonalAngle,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::LatticeSpec;
use crate::report::{check_finite, round_sig, sig};
use crate::scalar::Scalar;
use jacobi::{jacobi_eigen, SymMatrix};

/// Largest graph the dense eigensolver accepts by default.
pub const DEFAULT_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ClosedForm,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Subject {
    Lattice(LatticeSpec),
    Graph(String),
}

/// Laplacian eigenvalues sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
    source: Source,
    subject: Subject,
}

impl<T: Scalar> Spectrum<T> {
    pub fn new(mut values: Vec<T>, source: Source, subject: Subject) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Self { values, source, subject }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn subject(&self) -> &Subject {
        &self.subject
    }

    pub fn trace(&self) -> T {
        self.values.iter().copied().sum()
    }

    /// Values with `|v| <= eig_clamp` mapped to zero, so rounding noise on
    /// a zero mode adds nothing under a square root. Fails on anything more
    /// negative.
    pub fn clamped(&self) -> Result<Vec<T>> {
        let tol = T::eig_clamp();
        self.values
            .iter()
            .enumerate()
            .map(|(index, &v)| {
                if v < -tol {
                    Err(Error::InvalidSpectrum { index, value: v.as_f64() })
                } else if v <= tol {
                    Ok(T::zero())
                } else {
                    Ok(v)
                }
            })
            .collect()
    }

    /// Number of eigenvalues within the clamp tolerance of zero; equals the
    /// number of connected components.
    pub fn zero_multiplicity(&self) -> usize {
        let tol = T::eig_clamp();
        self.values.iter().filter(|v| v.abs() <= tol).count()
    }

    /// `index,eigenvalue` rows, 12 significant digits.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::from("index,eigenvalue\n");
        for (i, v) in self.values.iter().enumerate() {
            let v = v.as_f64();
            check_finite("eigenvalue", v)?;
            out.push_str(&format!("{i},{}\n", sig(v)));
        }
        Ok(out)
    }

    pub fn to_json(&self, tolerance: f64) -> Result<serde_json::Value> {
        let values = self
            .values
            .iter()
            .map(|v| {
                let v = v.as_f64();
                check_finite("eigenvalue", v).map(|_| round_sig(v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(serde_json::json!({
            "spec": self.subject,
            "source": self.source,
            "tolerance": tolerance,
            "values": values,
        }))
    }
}

/// Laplacian `D - A` as a dense symmetric matrix.
pub fn laplacian<T: Scalar>(g: &Graph) -> SymMatrix<T> {
    let mut l = SymMatrix::zeros(g.n_vertices());
    for (v, d) in g.degrees().into_iter().enumerate() {
        l.set(v, v, T::of_usize(d));
    }
    for &(u, v) in g.edges() {
        l.set(u, v, -T::one());
    }
    l
}

pub fn numeric_spectrum<T: Scalar>(g: &Graph, cap: usize) -> Result<Spectrum<T>> {
    numeric_spectrum_of(g, cap, Subject::Graph(format!("graph(n={},m={})", g.n_vertices(), g.n_edges())))
}

pub fn numeric_spectrum_of<T: Scalar>(g: &Graph, cap: usize, subject: Subject) -> Result<Spectrum<T>> {
    let n = g.n_vertices();
    if n == 0 {
        return Err(Error::InvalidSize("numeric spectrum of an empty graph".into()));
    }
    if n > cap {
        return Err(Error::Capacity { n_vertices: n, cap });
    }
    let eig = jacobi_eigen(laplacian::<T>(g), false)?;
    let spectrum = Spectrum::new(eig.values, Source::Numeric, subject);

    let expected = T::of_usize(2 * g.n_edges());
    let tol = T::of(1e-8).max(T::of(100.0) * T::epsilon() * T::of_usize(n));
    if (spectrum.trace() - expected).abs() > tol * expected.max(T::one()) {
        return Err(Error::Consistency(format!(
            "eigenvalue sum {} differs from 2|E| = {}",
            spectrum.trace(),
            expected
        )));
    }
    Ok(spectrum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Comparison {
    pub max_abs_deviation: f64,
    pub index: usize,
    pub tolerance: f64,
    pub pass: bool,
}

/// Largest elementwise deviation between two descending spectra.
pub fn spectrum_compare<T: Scalar>(a: &Spectrum<T>, b: &Spectrum<T>, tol: f64) -> Result<Comparison> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(a.len(), b.len()));
    }
    let (index, max_abs_deviation) = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (*x - *y).abs().as_f64())
        .enumerate()
        .fold((0, 0.0), |best, (i, d)| if d > best.1 { (i, d) } else { best });
    Ok(Comparison { max_abs_deviation, index, tolerance: tol, pass: max_abs_deviation <= tol })
}

/// Laplacian spectrum `{r - λ}` of an `r`-regular graph from its adjacency
/// spectrum.
pub fn regular_adjacency_to_laplacian<T: Scalar>(adjacency: &[T], r: usize) -> Vec<T> {
    let r = T::of_usize(r);
    adjacency.iter().map(|&l| r - l).collect()
}
