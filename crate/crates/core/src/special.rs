//! Gamma and Mittag-Leffler functions.
//!
//! The fractal gamma function is the classical one; the table entry
//! `L[S^n] = Γ(n+1) / s^(n+1)` only closes with that choice.

use crate::{Error, Result};

/// `Γ(z)` for real `z` away from the poles at `0, -1, -2, ...`.
pub fn gamma_f(z: f64) -> Result<f64> {
    if z.is_nan() {
        return Err(Error::range("z", z, "the reals"));
    }
    if z <= 0.0 && z == z.floor() {
        return Err(Error::Pole(z));
    }
    Ok(libm::tgamma(z))
}

/// `1 / Γ(z)`, zero at the poles.
pub fn rgamma(z: f64) -> f64 {
    if z <= 0.0 && z == z.floor() {
        0.0
    } else if z > 170.0 {
        (-libm::lgamma(z)).exp()
    } else {
        1.0 / libm::tgamma(z)
    }
}

/// Parameters of the two-parameter Mittag-Leffler series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub eta: f64,
    pub nu: f64,
    pub tol: f64,
    pub k_max: usize,
}

impl MLParams {
    pub fn new(eta: f64, nu: f64) -> Result<Self> {
        MLParams {
            eta,
            nu,
            tol: 1e-12,
            k_max: 300,
        }
        .validated()
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        self.tol = tol;
        self.validated()
    }

    pub fn with_k_max(mut self, k_max: usize) -> Result<Self> {
        self.k_max = k_max;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        if !(self.eta > 0.0 && self.eta.is_finite()) {
            return Err(Error::range("eta", self.eta, "(0, inf)"));
        }
        if !self.nu.is_finite() {
            return Err(Error::range("nu", self.nu, "the reals"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::range("tol", self.tol, "(0, inf)"));
        }
        if self.k_max == 0 {
            return Err(Error::InvalidParameter("k_max must be positive".into()));
        }
        Ok(self)
    }
}

/// A Mittag-Leffler value with series diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLEvaluation {
    pub value: f64,
    /// Index of the last term added.
    pub terms: usize,
    /// Largest term magnitude; `max_term * ε / |value|` bounds cancellation loss.
    pub max_term: f64,
}

/// Largest `|z|` accepted by [`mittag_leffler`].
pub const ML_MAX_ARGUMENT: f64 = 50.0;

/// `E_{η,ν}(z) = Σ z^k / Γ(ηk + ν)`.
pub fn mittag_leffler(params: &MLParams, z: f64) -> Result<f64> {
    mittag_leffler_eval(params, z).map(|e| e.value)
}

/// One-parameter form `E_η(z) = E_{η,1}(z)`.
pub fn mittag_leffler_1(eta: f64, z: f64) -> Result<f64> {
    mittag_leffler(&MLParams::new(eta, 1.0)?, z)
}

/// Forward summation of the series, stopping once the terms are decreasing
/// and `|term| < tol (1 + |sum|)`.
pub fn mittag_leffler_eval(params: &MLParams, z: f64) -> Result<MLEvaluation> {
    if !(z.abs() <= ML_MAX_ARGUMENT) {
        return Err(Error::range("z", z, "[-50, 50]"));
    }
    let MLParams { eta, nu, tol, k_max } = *params;
    let mut sum = rgamma(nu);
    let mut max_term = sum.abs();
    if z == 0.0 {
        return Ok(MLEvaluation {
            value: sum,
            terms: 0,
            max_term,
        });
    }
    let ln_z = z.abs().ln();
    let mut previous = sum.abs();
    let mut term = sum;
    for k in 1..=k_max {
        let arg = eta * k as f64 + nu;
        term = if arg > 171.0 || (arg > 0.0 && k as f64 * ln_z > 700.0) {
            let sign = if z < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            sign * (k as f64 * ln_z - libm::lgamma(arg)).exp()
        } else {
            z.powi(k as i32) * rgamma(arg)
        };
        sum += term;
        let magnitude = term.abs();
        max_term = max_term.max(magnitude);
        let decreasing = arg > 1.0 && magnitude <= previous;
        if decreasing && magnitude < tol * (1.0 + sum.abs()) {
            return Ok(MLEvaluation {
                value: sum,
                terms: k,
                max_term,
            });
        }
        previous = magnitude;
    }
    Err(Error::Convergence {
        method: "Mittag-Leffler series",
        estimate: sum,
        error: term.abs(),
    })
}
