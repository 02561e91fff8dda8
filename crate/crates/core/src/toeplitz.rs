//! Symmetric Toeplitz matrices, their Hankel corrections, and circulants.

use rustfft::num_complex::Complex64;

use crate::error::{Error, Result};
use crate::transforms::FourierPlan;

/// An `n x n` symmetric Toeplitz matrix stored as its first column.
///
/// `M[i][j] = first_column[|i - j|]`. The matrix-vector product runs in
/// `O(N log N)` by embedding into a circulant of the next power-of-two order
/// `>= 2n`; the embedded spectrum is cached at construction.
pub struct SymmetricToeplitz {
    first_column: Vec<f64>,
    plan: FourierPlan,
    embed_spectrum: Vec<Complex64>,
}

impl SymmetricToeplitz {
    pub fn new(first_column: Vec<f64>) -> Result<Self> {
        let n = first_column.len();
        if n == 0 {
            return Err(Error::Domain("Toeplitz order must be at least 1".into()));
        }
        if let Some(bad) = first_column.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "Toeplitz column entries must be finite, got {bad}"
            )));
        }
        let m = (2 * n).next_power_of_two();
        let mut embed = vec![Complex64::new(0.0, 0.0); m];
        embed[0].re = first_column[0];
        for k in 1..n {
            embed[k].re = first_column[k];
            embed[m - k].re = first_column[k];
        }
        let plan = FourierPlan::new(m);
        plan.forward(&mut embed);
        Ok(Self {
            first_column,
            plan,
            embed_spectrum: embed,
        })
    }

    pub fn order(&self) -> usize {
        self.first_column.len()
    }

    pub fn first_column(&self) -> &[f64] {
        &self.first_column
    }

    /// Entry `(i, j)` of the dense reconstruction.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.first_column[i.abs_diff(j)]
    }

    /// `y = M x` via one circulant-embedded FFT round trip.
    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.order();
        if x.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: x.len(),
            });
        }
        let m = self.embed_spectrum.len();
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (slot, &v) in buf.iter_mut().zip(x.iter()) {
            slot.re = v;
        }
        self.plan.forward(&mut buf);
        for (b, s) in buf.iter_mut().zip(self.embed_spectrum.iter()) {
            *b *= s;
        }
        self.plan.inverse(&mut buf);
        Ok(buf[..n].iter().map(|z| z.re).collect())
    }

    /// Dense row-major reconstruction, intended for small-order cross checks.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.order();
        let mut dense = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                dense[i * n + j] = self.entry(i, j);
            }
        }
        dense
    }
}

impl std::fmt::Debug for SymmetricToeplitz {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymmetricToeplitz")
            .field("n", &self.order())
            .finish()
    }
}

/// The symmetric Hankel correction subtracted from a Toeplitz matrix to land
/// in the tau algebra.
///
/// Anti-diagonal `s = i + j` reads `first_col[s]` for `s < n` and
/// `last_col[s - n + 1]` for `s >= n`. For a Toeplitz first column `c` the
/// corrections are `first_col = (c_2, ..., c_{n-1}, 0, 0)` and
/// `last_col = (0, 0, c_{n-1}, ..., c_2)`; offsets 0 and 1 never appear.
#[derive(Debug, Clone)]
pub struct HankelCorrection {
    n: usize,
    first_col: Vec<f64>,
    last_col: Vec<f64>,
}

impl HankelCorrection {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn first_col(&self) -> &[f64] {
        &self.first_col
    }

    pub fn last_col(&self) -> &[f64] {
        &self.last_col
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let s = i + j;
        if s < self.n {
            self.first_col[s]
        } else {
            self.last_col[s - self.n + 1]
        }
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut dense = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                dense[i * n + j] = self.entry(i, j);
            }
        }
        dense
    }
}

/// Hankel correction of a symmetric Toeplitz matrix.
///
/// For `n < 3` every corrected offset is out of range and the correction is
/// identically zero.
pub fn hankel_correction(t: &SymmetricToeplitz) -> HankelCorrection {
    let n = t.order();
    let c = t.first_column();
    let mut first_col = vec![0.0; n];
    let mut last_col = vec![0.0; n];
    for k in 2..n {
        first_col[k - 2] = c[k];
        last_col[n + 1 - k] = c[k];
    }
    HankelCorrection {
        n,
        first_col,
        last_col,
    }
}

/// A circulant matrix stored as its DFT spectrum.
pub struct CirculantMatrix {
    n: usize,
    spectrum: Vec<Complex64>,
    plan: FourierPlan,
}

impl CirculantMatrix {
    pub fn from_first_column(col: &[f64]) -> Result<Self> {
        let n = col.len();
        if n == 0 {
            return Err(Error::Domain("circulant order must be at least 1".into()));
        }
        let plan = FourierPlan::new(n);
        let spectrum = plan.forward_real(col);
        Ok(Self { n, spectrum, plan })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn spectrum(&self) -> &[Complex64] {
        &self.spectrum
    }

    /// First column recovered from the spectrum.
    pub fn first_column(&self) -> Vec<f64> {
        let mut buf = self.spectrum.clone();
        self.plan.inverse(&mut buf);
        buf.iter().map(|z| z.re).collect()
    }

    /// `y = C x` via forward transform, pointwise multiply, inverse transform.
    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut buf = self.plan.forward_real(x);
        for (b, s) in buf.iter_mut().zip(self.spectrum.iter()) {
            *b *= s;
        }
        self.plan.inverse(&mut buf);
        Ok(buf.iter().map(|z| z.re).collect())
    }

    /// `(I + d C)^{-1} v` via one FFT round trip; the imaginary residue of the
    /// result (below 1e-10 for real spectra) is discarded.
    pub fn shifted_solve(&self, d: f64, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut factors = Vec::with_capacity(self.n);
        for (k, s) in self.spectrum.iter().enumerate() {
            let denom = Complex64::new(1.0, 0.0) + d * s;
            if denom.norm() < 1e-14 {
                return Err(Error::SingularShift {
                    index: k,
                    magnitude: denom.norm(),
                });
            }
            factors.push(denom);
        }
        let mut buf = self.plan.forward_real(v);
        for (b, f) in buf.iter_mut().zip(factors.iter()) {
            *b /= f;
        }
        self.plan.inverse(&mut buf);
        Ok(buf.iter().map(|z| z.re).collect())
    }

    pub fn to_dense(&self) -> Vec<f64> {
        let col = self.first_column();
        let n = self.n;
        let mut dense = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                dense[i * n + j] = col[(n + i - j) % n];
            }
        }
        dense
    }
}

impl std::fmt::Debug for CirculantMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CirculantMatrix")
            .field("n", &self.n)
            .finish()
    }
}

/// Strang circulant approximation: copy the central diagonals and wrap.
///
/// `c_0 = t_0`, `c_k = t_k` for `1 <= k <= n/2`, `c_k = t_{n-k}` otherwise.
/// At even `n` the tie `k = n/2` is taken from `t_{n/2}`; both definitions
/// coincide there for symmetric input.
pub fn strang_circulant(t: &SymmetricToeplitz) -> Result<CirculantMatrix> {
    let n = t.order();
    let tc = t.first_column();
    let mut col = vec![0.0; n];
    col[0] = tc[0];
    for k in 1..n {
        col[k] = if k <= n / 2 { tc[k] } else { tc[n - k] };
    }
    CirculantMatrix::from_first_column(&col)
}
