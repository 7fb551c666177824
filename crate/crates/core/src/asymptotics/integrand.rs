use serde::Serialize;

use crate::lattice::Family;
use crate::scalar::Scalar;
use crate::spectral::honeycomb_modulus;

/// Prefactor of the four dispersive branches in the 3.12.12 and kagomé
/// integrands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchWeighting {
    /// `1/(c·√2)` with `c` sites per cell (6 or 9): the weight implied by
    /// eigenvalues `(5 ± sqrt(13 ± 4s))/2`.
    #[default]
    SpectrumDerived,
    /// `1/12` and `1/18`, the weights of the published constants 1.3375 and
    /// 1.7082.
    Published,
}

/// Per-vertex LEL density over the unit square of momenta `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Integrand {
    Square,
    Hexagonal,
    J31212 { weighting: BranchWeighting },
    TriangularKagome { weighting: BranchWeighting },
    M3342,
}

pub fn integrand(family: Family, weighting: BranchWeighting) -> Integrand {
    match family {
        Family::Square => Integrand::Square,
        Family::Hexagonal => Integrand::Hexagonal,
        Family::J31212 => Integrand::J31212 { weighting },
        Family::TriangularKagome => Integrand::TriangularKagome { weighting },
        Family::M3342 => Integrand::M3342,
    }
}

/// `Σ sqrt(5 ± sqrt(13 ± 4s))` over the four sign choices.
fn line_branches<T: Scalar>(s: T) -> T {
    let (five, thirteen, four) = (T::of(5.0), T::of(13.0), T::of(4.0));
    [thirteen + four * s, (thirteen - four * s).max(T::zero())]
        .into_iter()
        .map(|inner| {
            let r = inner.sqrt();
            (five + r).sqrt() + (five - r).max(T::zero()).sqrt()
        })
        .sum()
}

impl Integrand {
    pub fn family(&self) -> Family {
        match self {
            Integrand::Square => Family::Square,
            Integrand::Hexagonal => Family::Hexagonal,
            Integrand::J31212 { .. } => Family::J31212,
            Integrand::TriangularKagome { .. } => Family::TriangularKagome,
            Integrand::M3342 => Family::M3342,
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Integrand::Square => "sqrt(4 - 2cos 2πx - 2cos 2πy)",
            Integrand::Hexagonal => "[sqrt(3 + s) + sqrt(3 - s)] / 2",
            Integrand::J31212 { weighting: BranchWeighting::SpectrumDerived } => {
                "Σ± sqrt(5 ± sqrt(13 ± 4s)) / (6√2) + (√3 + √5)/6"
            }
            Integrand::J31212 { weighting: BranchWeighting::Published } => {
                "Σ± sqrt(5 ± sqrt(13 ± 4s)) / 12 + (√3 + √5)/6"
            }
            Integrand::TriangularKagome { weighting: BranchWeighting::SpectrumDerived } => {
                "Σ± sqrt(5 ± sqrt(13 ± 4s)) / (9√2) + (√3 + √5)/9 + √6/3"
            }
            Integrand::TriangularKagome { weighting: BranchWeighting::Published } => {
                "Σ± sqrt(5 ± sqrt(13 ± 4s)) / 18 + (√3 + √5)/9 + √6/3"
            }
            Integrand::M3342 => "[sqrt(5 - 2cos 2πx - s) + sqrt(5 - 2cos 2πx + s)] / 2",
        }
    }

    /// Density at `(x, y) ∈ [0, 1]²`; `s` denotes the honeycomb modulus
    /// at angles `(2πx, 2πy)`.
    pub fn eval<T: Scalar>(&self, x: T, y: T) -> T {
        let (a, b) = (T::TAU() * x, T::TAU() * y);
        let two = T::of(2.0);
        let half = T::of(0.5);
        match self {
            Integrand::Square => (T::of(4.0) - two * a.cos() - two * b.cos()).max(T::zero()).sqrt(),
            Integrand::Hexagonal => {
                let s = honeycomb_modulus(a, b);
                let three = T::of(3.0);
                half * ((three + s).sqrt() + (three - s).max(T::zero()).sqrt())
            }
            Integrand::J31212 { weighting } => {
                let weight = match weighting {
                    BranchWeighting::SpectrumDerived => T::one() / (T::of(6.0) * T::SQRT_2()),
                    BranchWeighting::Published => T::one() / T::of(12.0),
                };
                let flat = (T::of(3.0).sqrt() + T::of(5.0).sqrt()) / T::of(6.0);
                weight * line_branches(honeycomb_modulus(a, b)) + flat
            }
            Integrand::TriangularKagome { weighting } => {
                let weight = match weighting {
                    BranchWeighting::SpectrumDerived => T::one() / (T::of(9.0) * T::SQRT_2()),
                    BranchWeighting::Published => T::one() / T::of(18.0),
                };
                let flat = (T::of(3.0).sqrt() + T::of(5.0).sqrt()) / T::of(9.0) + T::of(6.0).sqrt() / T::of(3.0);
                weight * line_branches(honeycomb_modulus(a, b)) + flat
            }
            Integrand::M3342 => {
                let s = honeycomb_modulus(a, b);
                let d = T::of(5.0) - two * a.cos();
                half * ((d - s).max(T::zero()).sqrt() + (d + s).sqrt())
            }
        }
    }
}
