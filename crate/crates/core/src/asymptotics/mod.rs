//! Asymptotic per-vertex LEL constants by quadrature, and the finite-size
//! sweeps that approach them.

mod converge;
mod integrand;
mod quadrature;

pub use converge::{converge_sweep, lattice_spectrum, ConvergenceReport, ConvergenceRow, TREND_SLACK};
pub use integrand::{integrand, BranchWeighting, Integrand};
pub use quadrature::{
    gauss_legendre, kdim_constant, kdim_points, quad_constant, rectangle_average, richardson, QuadratureResult, Rule,
    DEFAULT_LEVELS, DEFAULT_POINTS, KDIM_MAX_EVALUATIONS,
};

use crate::error::Result;
use crate::lattice::Family;
use crate::scalar::Scalar;

/// `quad_constant` at the default grid with the default branch weighting.
pub fn default_constant<T: Scalar>(family: Family) -> Result<QuadratureResult<T>> {
    quad_constant(&integrand(family, BranchWeighting::default()), DEFAULT_POINTS, Rule::Midpoint, DEFAULT_LEVELS)
}
