//! Fast transform plans: the orthonormal DST-I and a complex FFT pair.
//!
//! The sine transform matrix is `S[i][j] = sqrt(2/(N+1)) sin(pi i j / (N+1))`
//! (1-based), which is symmetric, orthonormal and involutory (`S S = I`). It is
//! evaluated in `O(N log N)` by odd extension to a complex FFT of length
//! `2(N+1)`. Plans precompute the FFT twiddles once and are safe to share
//! across threads; every call uses its own scratch buffer.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Reusable plan for the orthonormal DST-I of a fixed size.
///
/// Carries an application counter so callers can assert transform budgets
/// (the interpolated preconditioner spends exactly `l + 1` transforms per
/// application).
pub struct SineTransformPlan {
    n: usize,
    fft: Arc<dyn Fft<f64>>,
    count: AtomicU64,
}

impl SineTransformPlan {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "transform size must be at least 1");
        let fft = FftPlanner::new().plan_fft_forward(2 * (n + 1));
        Self {
            n,
            fft,
            count: AtomicU64::new(0),
        }
    }

    /// Transform size N.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of transforms performed through this plan so far.
    pub fn transform_count(&self) -> u64 {
        self.count.load(Ordering::Relaxed)
    }

    /// Applies the orthonormal DST-I, `y = S x`.
    pub fn dst1(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut y = vec![0.0; self.n];
        self.dst1_into(x, &mut y)?;
        Ok(y)
    }

    /// In-place variant of [`dst1`](Self::dst1) writing into `out`.
    pub fn dst1_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        if out.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: out.len(),
            });
        }
        let m = 2 * (self.n + 1);
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (j, &xj) in x.iter().enumerate() {
            buf[j + 1].re = xj;
            buf[m - 1 - j].re = -xj;
        }
        self.fft.process(&mut buf);
        // FFT of the odd extension gives Z_k = -2i * sum_j x_j sin(pi k j / (N+1)).
        let scale = 0.5 * (2.0 / (self.n as f64 + 1.0)).sqrt();
        for k in 0..self.n {
            out[k] = -buf[k + 1].im * scale;
        }
        self.count.fetch_add(1, Ordering::Relaxed);
        Ok(())
    }

    /// First column of S, i.e. `(S e_1)_j = sqrt(2/(N+1)) sin(pi j/(N+1))`.
    ///
    /// Every entry is nonzero, which is what makes eigenvalue extraction from
    /// a tau matrix's first column well posed.
    pub fn first_basis_image(&self) -> Vec<f64> {
        let np1 = self.n as f64 + 1.0;
        let scale = (2.0 / np1).sqrt();
        (1..=self.n)
            .map(|j| scale * (std::f64::consts::PI * j as f64 / np1).sin())
            .collect()
    }
}

impl std::fmt::Debug for SineTransformPlan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SineTransformPlan")
            .field("n", &self.n)
            .field("count", &self.transform_count())
            .finish()
    }
}

/// Forward/inverse FFT pair of a fixed length with 1/n inverse normalization.
pub struct FourierPlan {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl FourierPlan {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "transform size must be at least 1");
        let mut planner = FftPlanner::new();
        Self {
            n,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// In-place forward DFT (unnormalized).
    pub fn forward(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.n);
        self.forward.process(buf);
    }

    /// In-place inverse DFT, scaled by `1/n` so that `inverse(forward(x)) = x`.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.n);
        self.inverse.process(buf);
        let scale = 1.0 / self.n as f64;
        for z in buf.iter_mut() {
            *z *= scale;
        }
    }

    /// DFT of a real vector.
    pub fn forward_real(&self, x: &[f64]) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.forward(&mut buf);
        buf
    }
}

impl std::fmt::Debug for FourierPlan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FourierPlan").field("n", &self.n).finish()
    }
}
