//! Lattice graphs, their Laplacian spectra and the Laplacian-energy-like
//! invariant `LEL(G) = Σ sqrt(μ_k)`.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the common double-precision instantiations.

pub mod asymptotics;
pub mod audit;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod lel;
pub mod report;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeDelta, Graph};
pub use lattice::{Boundary, Diagonal, Family, LatticeSpec};
pub use scalar::Scalar;

pub type Spectrum64 = spectral::Spectrum<f64>;
pub type Spectrum32 = spectral::Spectrum<f32>;
pub type LelValue64 = lel::LelValue<f64>;
pub type LelValue32 = lel::LelValue<f32>;
pub type QuadratureResult64 = asymptotics::QuadratureResult<f64>;
pub type QuadratureResult32 = asymptotics::QuadratureResult<f32>;
pub type ConvergenceReport64 = asymptotics::ConvergenceReport<f64>;
pub type PerturbationReport64 = lel::PerturbationReport<f64>;
pub type RatioRow64 = lel::RatioRow<f64>;
/// Exact degree-agreement fractions.
pub type Fraction = num_rational::Ratio<usize>;
