//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 100;

/// Dense row-major symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> SymMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn frobenius(&self) -> T {
        self.data.iter().map(|&x| x * x).sum::<T>().sqrt()
    }

    fn off_diagonal_norm(&self) -> T {
        let n = self.n;
        let mut s = T::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let x = self.data[i * n + j];
                    s = s + x * x;
                }
            }
        }
        s.sqrt()
    }

    fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.data[i * self.n + j] * v[j]).sum()).collect()
    }
}

/// Eigen-decomposition result. `vectors[k]` pairs with `values[k]`.
#[derive(Debug, Clone)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    pub vectors: Option<Vec<Vec<T>>>,
    pub sweeps: usize,
}

/// Runs cyclic-by-row Jacobi sweeps until the off-diagonal Frobenius norm is
/// below `T::jacobi_tol() * ‖A‖_F`. Eigenvalues come back unsorted, in
/// diagonal order.
pub fn jacobi_eigen<T: Scalar>(mut a: SymMatrix<T>, want_vectors: bool) -> Result<Eigen<T>> {
    if !a.is_symmetric() {
        return Err(Error::Consistency("jacobi input is not symmetric".into()));
    }
    let n = a.n;
    let mut v = want_vectors.then(|| {
        let mut id = vec![T::zero(); n * n];
        for i in 0..n {
            id[i * n + i] = T::one();
        }
        id
    });
    let target = T::jacobi_tol() * a.frobenius();
    let half = T::of(0.5);

    let mut sweeps = 0;
    while a.off_diagonal_norm() > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                // Smallest rotation angle, Rutishauser's formulation.
                let theta = (aqq - app) * half / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a.data[k * n + p];
                    let akq = a.data[k * n + q];
                    a.data[k * n + p] = c * akp - s * akq;
                    a.data[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a.data[p * n + k];
                    let aqk = a.data[q * n + k];
                    a.data[p * n + k] = c * apk - s * aqk;
                    a.data[q * n + k] = s * apk + c * aqk;
                }
                a.data[p * n + q] = T::zero();
                a.data[q * n + p] = T::zero();

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let values = (0..n).map(|i| a.data[i * n + i]).collect();
    let vectors = v.map(|v| (0..n).map(|k| (0..n).map(|i| v[i * n + k]).collect()).collect());
    Ok(Eigen { values, vectors, sweeps })
}
