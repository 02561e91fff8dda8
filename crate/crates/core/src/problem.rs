//! The benchmark problem family: diffusion coefficients, manufactured exact
//! solution, and its closed-form source term.

use crate::error::{Error, Result};

/// Diffusion coefficient selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    /// `d_1(x) = e^{5x} / (1 + x)`, smooth on [0, 1].
    D1,
    /// `d_2(x) = (e^{3x} + 0.2) / (x (1 - x))`, singular at both endpoints.
    D2,
    /// `d = 0`; turns the equation into `u_t = f`.
    Zero,
}

impl Coefficient {
    pub fn name(self) -> &'static str {
        match self {
            Coefficient::D1 => "d1",
            Coefficient::D2 => "d2",
            Coefficient::Zero => "zero",
        }
    }

    pub fn eval(self, x: f64) -> Result<f64> {
        match self {
            Coefficient::D1 => Ok(coefficient_d1(x)),
            Coefficient::D2 => coefficient_d2(x),
            Coefficient::Zero => Ok(0.0),
        }
    }
}

pub fn coefficient_d1(x: f64) -> f64 {
    (5.0 * x).exp() / (1.0 + x)
}

/// Singular at `x = 0` and `x = 1`; only interior evaluations are allowed.
pub fn coefficient_d2(x: f64) -> Result<f64> {
    if x <= 0.0 || x >= 1.0 {
        return Err(Error::Domain(format!(
            "d2 is singular at the endpoints; got x = {x}"
        )));
    }
    Ok(((3.0 * x).exp() + 0.2) / (x * (1.0 - x)))
}

/// Manufactured exact solution `u(x, t) = t e^{-lambda x} x^3 (1 - x)^3`.
pub fn exact_solution(x: f64, t: f64, lambda: f64) -> f64 {
    t * (-lambda * x).exp() * x.powi(3) * (1.0 - x).powi(3)
}

/// Closed-form source term matching [`exact_solution`].
///
/// The time-derivative term, the two fractional-derivative series (an m-sum of
/// gamma ratios in `x` and a 30-term double series in `1 - x`), and the
/// tempering correction `2 t d lambda^beta u/t`. Gamma ratios are evaluated as
/// log-gamma differences; every argument is positive so no reflection is
/// needed.
pub fn manufactured_source(x: f64, t: f64, lambda: f64, beta: f64, d_at_x: f64) -> f64 {
    const BINOM3: [f64; 4] = [1.0, 3.0, 3.0, 1.0];

    let shape = (-lambda * x).exp() * x.powi(3) * (1.0 - x).powi(3);

    let mut left = 0.0;
    for m in 0..4usize {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let a = (4 + m) as f64;
        let ratio = (libm::lgamma(a) - libm::lgamma(a - beta)).exp();
        left += sign * BINOM3[m] * ratio * x.powf(3.0 + m as f64 - beta);
    }
    left *= (-lambda * x).exp();

    let mut right = 0.0;
    let mut pow3_over_factorial = 1.0; // 3^j / j!
    for j in 0..=30usize {
        if j > 0 {
            pow3_over_factorial *= 3.0 / j as f64;
        }
        let mut inner = 0.0;
        for m in 0..4usize {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let a = (4 + m + j) as f64;
            let ratio = (libm::lgamma(a) - libm::lgamma(a - beta)).exp();
            inner += sign * BINOM3[m] * ratio * (1.0 - x).powf(j as f64 + 3.0 + m as f64 - beta);
        }
        right += pow3_over_factorial * inner;
    }
    right *= (lambda * (x - 2.0)).exp();

    shape - t * d_at_x * (left + right) + 2.0 * t * d_at_x * lambda.powf(beta) * shape
}

/// Source-term selection for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceKind {
    /// The closed-form source matching the manufactured exact solution.
    Manufactured,
    /// `f = 0`.
    Zero,
}

/// Full description of one initial-boundary value problem instance.
///
/// The state vector is interior-only (`N` points, `x_i = a + i h` with
/// `h = (b - a)/(N + 1)`); homogeneous boundary values are never stored.
#[derive(Debug, Clone)]
pub struct ProblemConfig {
    pub a: f64,
    pub b: f64,
    pub t_final: f64,
    /// Interior grid points.
    pub n: usize,
    /// Time steps.
    pub m: usize,
    pub beta: f64,
    pub lambda: f64,
    pub gamma1: f64,
    pub coefficient: Coefficient,
    pub source: SourceKind,
}

impl ProblemConfig {
    /// The benchmark defaults on `[0, 1]`, `T = 1`, `beta = 1.2`,
    /// `lambda = 1.5`, `gamma1 = 0.75`, with `M = N + 1` so that `dt = h`.
    pub fn manufactured(n: usize, coefficient: Coefficient) -> Self {
        Self {
            a: 0.0,
            b: 1.0,
            t_final: 1.0,
            n,
            m: n + 1,
            beta: 1.2,
            lambda: 1.5,
            gamma1: 0.75,
            coefficient,
            source: SourceKind::Manufactured,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.b > self.a) {
            return Err(Error::Domain(format!(
                "interval must satisfy a < b, got [{}, {}]",
                self.a, self.b
            )));
        }
        if !(self.t_final > 0.0) {
            return Err(Error::Domain(format!(
                "time horizon must be positive, got {}",
                self.t_final
            )));
        }
        if self.n < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 interior grid points, got {}",
                self.n
            )));
        }
        if self.m < 1 {
            return Err(Error::Domain(format!(
                "need at least 1 time step, got {}",
                self.m
            )));
        }
        if !(1.0 < self.beta && self.beta < 2.0) {
            return Err(Error::Domain(format!(
                "beta must lie in (1, 2), got {}",
                self.beta
            )));
        }
        if !(self.lambda >= 0.0) {
            return Err(Error::Domain(format!(
                "lambda must be nonnegative, got {}",
                self.lambda
            )));
        }
        Ok(())
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / (self.n as f64 + 1.0)
    }

    pub fn dt(&self) -> f64 {
        self.t_final / self.m as f64
    }

    /// Interior grid `x_1..x_N`.
    pub fn grid(&self) -> Vec<f64> {
        let h = self.h();
        (1..=self.n).map(|i| self.a + i as f64 * h).collect()
    }

    pub fn diffusion_at(&self, x: f64) -> Result<f64> {
        self.coefficient.eval(x)
    }

    pub fn source_at(&self, x: f64, t: f64) -> Result<f64> {
        match self.source {
            SourceKind::Zero => Ok(0.0),
            SourceKind::Manufactured => {
                let d = self.coefficient.eval(x)?;
                Ok(manufactured_source(x, t, self.lambda, self.beta, d))
            }
        }
    }

    pub fn initial_at(&self, _x: f64) -> f64 {
        0.0
    }

    pub fn exact_at(&self, x: f64, t: f64) -> f64 {
        exact_solution(x, t, self.lambda)
    }
}
