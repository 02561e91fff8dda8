//! The tau matrix class: matrices diagonalized by the orthonormal DST-I.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::toeplitz::SymmetricToeplitz;
use crate::transforms::SineTransformPlan;

/// A tau-class matrix `S diag(eigenvalues) S` stored as its eigenvalues.
///
/// All tau matrices of one order share the sine eigenbasis, so they commute
/// and shifted inverses cost two transforms plus a pointwise divide.
pub struct TauMatrix {
    eigenvalues: Vec<f64>,
    plan: Arc<SineTransformPlan>,
}

impl TauMatrix {
    /// Projects a symmetric Toeplitz matrix into the tau algebra.
    ///
    /// The first column of `tau(T) = T - HC(T)` is `c_i - c_{i+2}` (entries past
    /// the end read as zero), and the eigenvalues follow from one transform:
    /// `lambda_j = (S c^tau)_j / (S e_1)_j`, valid because `(S e_1)_j` never
    /// vanishes. Cost `O(N log N)`.
    pub fn from_toeplitz(t: &SymmetricToeplitz, plan: Arc<SineTransformPlan>) -> Result<Self> {
        let n = t.order();
        if plan.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: plan.len(),
            });
        }
        let c = t.first_column();
        let mut corrected = c.to_vec();
        for i in 0..n.saturating_sub(2) {
            corrected[i] -= c[i + 2];
        }
        let transformed = plan.dst1(&corrected)?;
        let basis = plan.first_basis_image();
        let eigenvalues = transformed
            .iter()
            .zip(basis.iter())
            .map(|(num, den)| num / den)
            .collect();
        Ok(Self { eigenvalues, plan })
    }

    /// Builds a tau matrix directly from eigenvalues (test and diagnostics hook).
    pub fn from_eigenvalues(eigenvalues: Vec<f64>, plan: Arc<SineTransformPlan>) -> Result<Self> {
        if plan.len() != eigenvalues.len() {
            return Err(Error::LengthMismatch {
                expected: eigenvalues.len(),
                got: plan.len(),
            });
        }
        Ok(Self { eigenvalues, plan })
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn plan(&self) -> &Arc<SineTransformPlan> {
        &self.plan
    }

    /// `y = S diag(lambda) S v`.
    pub fn matvec(&self, v: &[f64]) -> Result<Vec<f64>> {
        let mut w = self.plan.dst1(v)?;
        for (wk, lk) in w.iter_mut().zip(self.eigenvalues.iter()) {
            *wk *= lk;
        }
        self.plan.dst1(&w)
    }

    /// `(I + d tau)^{-1} v = S diag(1/(1 + d lambda_k)) S v`.
    ///
    /// Two transforms plus a pointwise divide; any `|1 + d lambda_k|` below
    /// 1e-14 is reported as a singular shift.
    pub fn shifted_solve(&self, d: f64, v: &[f64]) -> Result<Vec<f64>> {
        let mut factors = Vec::with_capacity(self.order());
        for (k, lk) in self.eigenvalues.iter().enumerate() {
            let denom = 1.0 + d * lk;
            if denom.abs() < 1e-14 {
                return Err(Error::SingularShift {
                    index: k,
                    magnitude: denom.abs(),
                });
            }
            factors.push(denom);
        }
        let mut w = self.plan.dst1(v)?;
        for (wk, f) in w.iter_mut().zip(factors.iter()) {
            *wk /= f;
        }
        self.plan.dst1(&w)
    }

    /// Dense reconstruction via `n` transforms; debug-scale orders only.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.order();
        let mut dense = vec![0.0; n * n];
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            let col = self.matvec(&e).expect("basis vector has the plan's length");
            e[j] = 0.0;
            for i in 0..n {
                dense[i * n + j] = col[i];
            }
        }
        dense
    }
}

impl std::fmt::Debug for TauMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TauMatrix")
            .field("n", &self.order())
            .finish()
    }
}
