use std::ops::Sub;

use super::{EigenWorkspace, Spectrum};
use crate::error::Result;

/// Dense real symmetric matrix, row-major. Indices are zero-based.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds a matrix from `f(i, j)` evaluated on the lower triangle and mirrored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.iter().sum()).collect()
    }

    /// `self ⊗ other`; the Kronecker product of symmetric matrices is symmetric.
    pub fn kron(&self, other: &SymMatrix) -> SymMatrix {
        let (p, q) = (self.n, other.n);
        SymMatrix::from_fn(p * q, |i, j| self.get(i / q, j / q) * other.get(i % q, j % q))
    }

    /// All eigenvalues, sorted descending.
    pub fn eigenvalues(&self) -> Result<Spectrum> {
        let values = EigenWorkspace::new().eigenvalues(&self.data, self.n)?.to_vec();
        Ok(Spectrum::from_sorted(values, Spectrum::accuracy_for(self.n)))
    }
}

impl Sub for &SymMatrix {
    type Output = SymMatrix;

    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, rhs.n, "matrix orders differ");
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}
