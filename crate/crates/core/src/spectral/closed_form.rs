//! Closed-form Laplacian spectra of the lattice families.

use crate::error::{Error, Result};
use crate::lattice::{Boundary, Family, LatticeSpec};
use crate::scalar::Scalar;

use super::{Source, Spectrum, Subject};

/// Momentum grid `alpha_i = 2πi/(m+1)`, `beta_j = 2πj/(n+1)` for
/// `i ∈ 0..=m`, `j ∈ 0..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridAngles {
    pub m: usize,
    pub n: usize,
}

impl GridAngles {
    pub fn alpha<T: Scalar>(&self, i: usize) -> T {
        T::TAU() * T::of_usize(i) / T::of_usize(self.m + 1)
    }

    pub fn beta<T: Scalar>(&self, j: usize) -> T {
        T::TAU() * T::of_usize(j) / T::of_usize(self.n + 1)
    }

    pub fn iter<T: Scalar>(self) -> impl Iterator<Item = (T, T)> {
        (0..=self.m).flat_map(move |i| (0..=self.n).map(move |j| (self.alpha(i), self.beta(j))))
    }
}

/// `|1 + e^{ia} + e^{ib}| = sqrt(3 + 2cos a + 2cos b + 2cos(a+b))`, the
/// honeycomb Bloch modulus. Rounding below zero is clamped.
#[inline]
pub fn honeycomb_modulus<T: Scalar>(a: T, b: T) -> T {
    let two = T::of(2.0);
    let r = T::of(3.0) + two * a.cos() + two * b.cos() + two * (a + b).cos();
    r.max(T::zero()).sqrt()
}

/// How the dispersive branches of the 3.12.12 / kagomé spectra are scaled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchForm {
    /// `(5 ± sqrt(13 ± 4s)) / 2`
    Halved,
    /// `5 ± sqrt(13 ± 4s)`
    Unhalved,
}

/// Which momentum enters the `5 - 2cos(·)` diagonal term of the 3³.4² blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MDiagonalAngle {
    /// `5 - 2cos(2πj/n)`, the momentum along the rows of sites.
    Column,
    /// `5 - 2cos(2πi/m)`, the momentum across the doubled rows.
    Row,
}

pub fn closed_form_spectrum<T: Scalar>(spec: &LatticeSpec) -> Result<Spectrum<T>> {
    let values = match (spec.family, spec.boundary) {
        (Family::Square, b) => square(spec.m, spec.n, b)?,
        (Family::Hexagonal, Boundary::Torus) => hexagonal(spec.m, spec.n),
        (Family::J31212 | Family::TriangularKagome, Boundary::Torus) => {
            line_family(spec.family, spec.m, spec.n, BranchForm::Halved)
        }
        (Family::M3342, Boundary::Torus) => m3342(spec.m, spec.n, MDiagonalAngle::Column)?,
        _ => return Err(Error::NoClosedForm(spec.to_string())),
    };
    Ok(Spectrum::new(values, Source::ClosedForm, Subject::Lattice(*spec)))
}

pub fn has_closed_form(spec: &LatticeSpec) -> bool {
    spec.family == Family::Square || spec.boundary == Boundary::Torus
}

fn path_eigenvalues<T: Scalar>(n: usize) -> impl Iterator<Item = T> {
    (0..n).map(move |i| T::of(2.0) - T::of(2.0) * (T::PI() * T::of_usize(i) / T::of_usize(n)).cos())
}

fn cycle_eigenvalues<T: Scalar>(n: usize) -> impl Iterator<Item = T> {
    (0..n).map(move |j| T::of(2.0) - T::of(2.0) * (T::TAU() * T::of_usize(j) / T::of_usize(n)).cos())
}

fn square<T: Scalar>(m: usize, n: usize, boundary: Boundary) -> Result<Vec<T>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize("square lattice needs m, n >= 1".into()));
    }
    let rows: Vec<T> = match boundary {
        Boundary::Torus => cycle_eigenvalues(m).collect(),
        _ => path_eigenvalues(m).collect(),
    };
    let cols: Vec<T> = match boundary {
        Boundary::Free => path_eigenvalues(n).collect(),
        _ => cycle_eigenvalues(n).collect(),
    };
    Ok(rows.iter().flat_map(|&a| cols.iter().map(move |&b| a + b)).collect())
}

fn hexagonal<T: Scalar>(m: usize, n: usize) -> Vec<T> {
    let three = T::of(3.0);
    GridAngles { m, n }
        .iter::<T>()
        .flat_map(|(a, b)| {
            let s = honeycomb_modulus(a, b);
            [three + s, three - s]
        })
        .collect()
}

/// Dispersive part shared by the 3.12.12 and kagomé lattices plus their
/// flat bands.
pub fn line_family<T: Scalar>(family: Family, m: usize, n: usize, form: BranchForm) -> Vec<T> {
    let cells = (m + 1) * (n + 1);
    let flat: &[(f64, usize)] = match family {
        Family::J31212 => &[(5.0, cells), (3.0, cells)],
        Family::TriangularKagome => &[(6.0, 3 * cells), (3.0, cells), (5.0, cells)],
        _ => panic!("line_family called for {family}"),
    };
    let mut values: Vec<T> = flat.iter().flat_map(|&(v, k)| std::iter::repeat_n(T::of(v), k)).collect();
    let scale = match form {
        BranchForm::Halved => T::of(0.5),
        BranchForm::Unhalved => T::one(),
    };
    let (five, thirteen, four) = (T::of(5.0), T::of(13.0), T::of(4.0));
    for (a, b) in (GridAngles { m, n }).iter::<T>() {
        let s = honeycomb_modulus(a, b);
        for inner in [thirteen + four * s, (thirteen - four * s).max(T::zero())] {
            let r = inner.sqrt();
            values.push(scale * (five + r));
            values.push(scale * (five - r));
        }
    }
    values
}

/// `M(n, 2m)` torus eigenvalues `5 - 2cos(θ) ± |1 + e^{iθ_i} + e^{iφ_j}|`
/// with `θ_i = 2πi/m`, `φ_j = 2πj/n` and `θ` chosen by `angle`.
pub fn m3342<T: Scalar>(m: usize, n: usize, angle: MDiagonalAngle) -> Result<Vec<T>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize("3^3.4^2 lattice needs m, n >= 1".into()));
    }
    let (two, five) = (T::of(2.0), T::of(5.0));
    let mut values = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        let theta = T::TAU() * T::of_usize(i) / T::of_usize(m);
        for j in 0..n {
            let phi = T::TAU() * T::of_usize(j) / T::of_usize(n);
            let s = honeycomb_modulus(theta, phi);
            let diag = five
                - two
                    * match angle {
                        MDiagonalAngle::Column => phi,
                        MDiagonalAngle::Row => theta,
                    }
                    .cos();
            values.push(diag + s);
            values.push(diag - s);
        }
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn spec(f: Family, b: Boundary, m: usize, n: usize) -> LatticeSpec {
        LatticeSpec::new(f, b, m, n)
    }

    #[test]
    fn free_two_by_two_square() {
        let s = closed_form_spectrum::<f64>(&spec(Family::Square, Boundary::Free, 2, 2)).unwrap();
        let expect = [4.0, 2.0, 2.0, 0.0];
        for (a, b) in s.values().iter().zip(expect) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn square_torus_multiset_by_enumeration() {
        // 4 - 2cos(πi/2) - 2cos(πj/2), i, j in 0..4: cos values 1, 0, -1, 0.
        let cosines = [1.0, 0.0, -1.0, 0.0];
        let mut expect: Vec<f64> =
            cosines.iter().flat_map(|a| cosines.iter().map(move |b| 4.0 - 2.0 * a - 2.0 * b)).collect();
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_eq!(expect.iter().filter(|&&v| v == 4.0).count(), 6);
        assert_eq!(expect.iter().filter(|&&v| v == 2.0).count(), 4);
        assert_eq!(expect.iter().filter(|&&v| v == 6.0).count(), 4);
        assert_eq!((expect[0], expect[15]), (8.0, 0.0));

        let s = closed_form_spectrum::<f64>(&spec(Family::Square, Boundary::Torus, 4, 4)).unwrap();
        assert_eq!(s.len(), 16);
        for (a, b) in s.values().iter().zip(&expect) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-12);
        }
    }

    #[test]
    fn hexagonal_extremes() {
        let s = closed_form_spectrum::<f64>(&spec(Family::Hexagonal, Boundary::Torus, 2, 2)).unwrap();
        assert_eq!(s.len(), 18);
        assert_abs_diff_eq!(s.values()[0], 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.values()[17], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn counts_match_vertex_counts() {
        for f in Family::ALL {
            let sp = spec(f, Boundary::Torus, 3, 4);
            assert_eq!(closed_form_spectrum::<f64>(&sp).unwrap().len(), sp.vertex_count(), "{f}");
        }
        for b in Boundary::ALL {
            let sp = spec(Family::Square, b, 3, 5);
            assert_eq!(closed_form_spectrum::<f32>(&sp).unwrap().len(), 15);
        }
    }

    #[test]
    fn unsupported_combinations() {
        for f in [Family::Hexagonal, Family::J31212, Family::TriangularKagome, Family::M3342] {
            for b in [Boundary::Cylinder, Boundary::Free] {
                assert!(matches!(closed_form_spectrum::<f64>(&spec(f, b, 3, 3)), Err(Error::NoClosedForm(_))));
            }
        }
    }

    #[test]
    fn trace_is_twice_edge_count() {
        for f in Family::ALL {
            let sp = spec(f, Boundary::Torus, 4, 5);
            let s = closed_form_spectrum::<f64>(&sp).unwrap();
            let edges = sp.vertex_count() * f.torus_degree() / 2;
            assert_abs_diff_eq!(s.trace(), 2.0 * edges as f64, epsilon = 1e-9);
        }
    }

    #[test]
    fn modulus_at_origin_and_dirac_point() {
        assert_abs_diff_eq!(honeycomb_modulus(0.0f64, 0.0), 3.0, epsilon = 1e-15);
        let k = 2.0 * std::f64::consts::PI / 3.0;
        assert!(honeycomb_modulus(k, k) < 1e-7);
    }
}
