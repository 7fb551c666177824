//! Floating-point scalar abstraction shared by the spectral, LEL and
//! quadrature code.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar used for eigenvalues and integrals: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Eigenvalues in `[-eig_clamp, eig_clamp]` are treated as exact zeros.
    fn eig_clamp() -> Self;

    /// Relative off-diagonal Frobenius norm at which Jacobi sweeps stop.
    fn jacobi_tol() -> Self;

    /// Lossy conversion from an `f64` constant.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable")
    }

    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Scalar for f64 {
    fn eig_clamp() -> Self {
        1e-9
    }

    fn jacobi_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn eig_clamp() -> Self {
        1e-4
    }

    fn jacobi_tol() -> Self {
        1e-6
    }
}

/// Pairwise (fixed binary tree) summation. The reduction order only depends
/// on the slice length, so results are bit-stable for a given input.
pub fn pairwise_sum<T: Scalar>(values: &[T]) -> T {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().fold(T::zero(), |acc, &v| acc + v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
