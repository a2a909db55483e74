//! Non-local fractal operators: Riemann-Liouville integral and derivative,
//! Caputo derivative, Grünwald sum, and the scale-change law.
//!
//! All operators act as classical fractional operators of order `β` on the
//! profile `g` in the staircase coordinate and are evaluated at `u = S(x)`:
//!
//! ```text
//! I^β g(u)  = 1/Γ(β)   ∫_0^u (u - t)^(β-1) g(t) dt
//! D^β g(u)  = d^n/du^n  I^(n-β) g(u),            n = ⌈β⌉
//! CD^β g(u) = I^(n-β) g^(n)(u)
//! ```
//!
//! With that calibration the power rules `I^β u^η = Γ(η+1)/Γ(η+β+1) u^(η+β)`,
//! `D^β u^η = Γ(η+1)/Γ(η-β+1) u^(η-β)` and the constant rule hold as stated.
//! Orders that are whole multiples of the dimension, `β = kα`, are routed to
//! the local operators: the `k`-fold staircase integral and the `k`-th `F^α`
//! derivative.

use crate::diff;
use crate::local::derivative_u;
use crate::quad::{self, QuadOptions};
use crate::special::{gamma_f, rgamma};
use crate::{CantorSpec, Error, Profile, Result};

/// Quadrature error accepted when the tight target cannot be met.
const OPERATOR_TOLERANCE: f64 = 1e-9;

/// Largest supported order.
pub const MAX_ORDER: f64 = 2.0;

/// The fractal dimension `α` paired with a non-local order `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderPair {
    alpha: f64,
    beta: f64,
}

impl OrderPair {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::range("alpha", alpha, "(0, 1]"));
        }
        if !(0.0..MAX_ORDER).contains(&beta) {
            return Err(Error::range("beta", beta, "[0, 2)"));
        }
        Ok(OrderPair { alpha, beta })
    }

    /// Order `β` with the dimension of `spec`.
    pub fn for_spec(spec: &CantorSpec, beta: f64) -> Result<Self> {
        Self::new(spec.alpha(), beta)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Smallest integer `n` with `n α ≥ β`.
    pub fn n(&self) -> u32 {
        let ratio = self.beta / self.alpha;
        let n = ratio.ceil();
        if n - ratio > 1.0 - 1e-12 {
            (n - 1.0).max(0.0) as u32
        } else {
            n as u32
        }
    }

    /// `Some(k)` when `β = kα`, in which case the operators reduce to local ones.
    pub fn local_multiple(&self) -> Option<u32> {
        let k = (self.beta / self.alpha).round();
        let gap = (self.beta - k * self.alpha).abs();
        (gap <= 1e-12 * self.beta.max(1.0)).then_some(k as u32)
    }

    /// `(n - 1) α ≤ β < n α`, the admissible window for the Caputo derivative.
    pub fn in_caputo_window(&self) -> bool {
        let n = self.n() as f64;
        (n - 1.0) * self.alpha <= self.beta && self.beta < n * self.alpha
    }

    /// Integer order of the classical derivative taken in the staircase coordinate.
    fn classical_n(&self) -> u32 {
        (self.beta - 1e-12).ceil().max(0.0) as u32
    }
}

/// Classical Riemann-Liouville integral of order `order ≥ 0` at `u`.
///
/// The interval is split at `u/2`. On the upper half the substitution
/// `v = (u - t)^order` removes the kernel singularity when `order < 1`; the
/// lower half is left to adaptive refinement, which also absorbs integrable
/// singularities of `g` at zero.
fn classical_rl_integral(p: &Profile, order: f64, u: f64) -> Result<f64> {
    if order == 0.0 {
        return p.try_eval(u);
    }
    if u == 0.0 {
        return Ok(0.0);
    }
    let opts = QuadOptions::tight();
    let mid = 0.5 * u;
    let lower = quad::integrate_accepting(
        |t| (u - t).powf(order - 1.0) * p.eval(t),
        0.0,
        mid,
        &opts,
        OPERATOR_TOLERANCE,
    )? * rgamma(order);
    let upper = if order < 1.0 {
        let inv = 1.0 / order;
        let top = (u - mid).powf(order);
        quad::integrate_accepting(|v| p.eval(u - v.powf(inv)), 0.0, top, &opts, OPERATOR_TOLERANCE)?
            * rgamma(order + 1.0)
    } else {
        quad::integrate_accepting(
            |t| (u - t).powf(order - 1.0) * p.eval(t),
            mid,
            u,
            &opts,
            OPERATOR_TOLERANCE,
        )? * rgamma(order)
    };
    Ok(lower + upper)
}

fn check_u(u: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero { u >= 0.0 } else { u > 0.0 };
    if ok && u.is_finite() {
        Ok(())
    } else {
        Err(Error::range("u", u, if allow_zero { "[0, inf)" } else { "(0, inf)" }))
    }
}

/// `I^β g(u)` in the staircase coordinate.
pub fn rl_integral_u(p: &Profile, ord: &OrderPair, u: f64) -> Result<f64> {
    check_u(u, true)?;
    match ord.local_multiple() {
        Some(k) => classical_rl_integral(p, k as f64, u),
        None => classical_rl_integral(p, ord.beta, u),
    }
}

/// Fractal left-sided Riemann-Liouville integral `_0 I_x^β f` at `x`.
pub fn rl_integral(spec: &CantorSpec, p: &Profile, ord: &OrderPair, x: f64) -> Result<f64> {
    rl_integral_u(p, ord, spec.eval(x)?)
}

/// `D^β g(u)` in the staircase coordinate.
pub fn rl_derivative_u(p: &Profile, ord: &OrderPair, u: f64) -> Result<f64> {
    if let Some(k) = ord.local_multiple() {
        if k == 0 {
            check_u(u, true)?;
            return p.try_eval(u);
        }
        check_u(u, false)?;
        return derivative_u(p, u, k);
    }
    check_u(u, false)?;
    let n = ord.classical_n();
    let complement = n as f64 - ord.beta;
    if complement == 0.0 {
        return derivative_u(p, u, n);
    }
    diff::derivative(
        |t| classical_rl_integral(p, complement, t),
        u,
        n,
        diff::default_step(n),
        0.0,
    )
}

/// Fractal left-sided Riemann-Liouville derivative `_0 D_x^β f` at `x`.
pub fn rl_derivative(spec: &CantorSpec, p: &Profile, ord: &OrderPair, x: f64) -> Result<f64> {
    rl_derivative_u(p, ord, spec.eval(x)?)
}

/// Caputo derivative `I^(n-β) g^(n)(u)` in the staircase coordinate.
///
/// Evaluated as the Riemann-Liouville derivative of `g` minus its Taylor
/// polynomial of degree `n-1` at zero, which equals `I^(n-β) g^(n)` without
/// differentiating `g` where `g^(n)` may blow up (`g = u^η`, `η < n`).
/// Constants and polynomials below degree `n` give exactly zero.
pub fn caputo_derivative_u(p: &Profile, ord: &OrderPair, u: f64) -> Result<f64> {
    if let Some(k) = ord.local_multiple() {
        check_u(u, k == 0)?;
        return derivative_u(p, u, k);
    }
    if !ord.in_caputo_window() {
        return Err(Error::InvalidParameter(format!(
            "beta = {} is outside the Caputo window for alpha = {}",
            ord.beta, ord.alpha
        )));
    }
    check_u(u, false)?;
    let n = ord.classical_n();
    let complement = n as f64 - ord.beta;
    if complement == 0.0 {
        return derivative_u(p, u, n);
    }
    let mut taylor = Vec::with_capacity(n as usize);
    let mut factorial = 1.0;
    for k in 0..n {
        if k > 0 {
            factorial *= k as f64;
        }
        let d = derivative_u(p, 0.0, k)?;
        if !d.is_finite() {
            return Err(Error::Singular { at: 0.0 });
        }
        taylor.push(d / factorial);
    }
    let inner = p.clone();
    let remainder = Profile::new(format!("{} minus Taylor part", p.description()), move |t| {
        let poly = taylor.iter().rev().fold(0.0, |acc, c| acc * t + c);
        inner.eval(t) - poly
    });
    diff::derivative(
        |t| classical_rl_integral(&remainder, complement, t),
        u,
        n,
        diff::default_step(n),
        0.0,
    )
}

/// Fractal left-sided Caputo derivative `_0^C D_x^β f` at `x`.
pub fn caputo_derivative(spec: &CantorSpec, p: &Profile, ord: &OrderPair, x: f64) -> Result<f64> {
    caputo_derivative_u(p, ord, spec.eval(x)?)
}

/// Grünwald weights `w_k = Γ(k-β) / (Γ(-β) Γ(k+1))` for `k = 0..n`, by the
/// recurrence `w_k = w_{k-1} (k-1-β) / k`.
pub fn grunwald_weights(order: f64, n: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(n + 1);
    w.push(1.0);
    for k in 1..=n {
        let prev = w[k - 1];
        w.push(prev * (k as f64 - 1.0 - order) / k as f64);
    }
    w
}

/// Grünwald sum `(u/N)^(-β) Σ_{k<N} w_k g(u - k u/N)` at `u`.
pub fn grunwald_u(p: &Profile, ord: &OrderPair, u: f64, n_terms: usize) -> Result<f64> {
    let b = ord.beta;
    if b == b.floor() {
        return Err(Error::InvalidParameter(format!(
            "Grünwald sum needs a non-integer order, Γ(-{b}) is a pole"
        )));
    }
    if n_terms < 2 {
        return Err(Error::InvalidParameter(format!(
            "n_terms must be at least 2, got {n_terms}"
        )));
    }
    check_u(u, false)?;
    let h = u / n_terms as f64;
    let w = grunwald_weights(b, n_terms - 1);
    let mut sum = 0.0;
    for (k, wk) in w.iter().enumerate() {
        sum += wk * p.try_eval(u - k as f64 * h)?;
    }
    Ok(h.powf(-b) * sum)
}

/// Fractal Grünwald derivative `^G D^β f` at `x` with `n_terms` terms.
pub fn grunwald_derivative(spec: &CantorSpec, p: &Profile, ord: &OrderPair, x: f64, n_terms: usize) -> Result<f64> {
    grunwald_u(p, ord, spec.eval(x)?, n_terms)
}

/// Both sides of the scale-change law
/// `_0D_x^β f(S(λx)) = λ^(βα) · _0D_{λx}^β f(S(λx))` for `λ = 3^-m`.
///
/// The left side differentiates the dilated profile `u -> g(λ^α u)` at
/// `S(x)`; the right side differentiates `g` itself at `S(λx)`.
pub fn scale_check(spec: &CantorSpec, p: &Profile, ord: &OrderPair, lambda: f64, x: f64) -> Result<(f64, f64)> {
    let m = -lambda.ln() / 3f64.ln();
    if !(lambda > 0.0 && lambda <= 1.0) || (m - m.round()).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "lambda = {lambda} is not a power 3^-m; the staircase is only homogeneous under those"
        )));
    }
    let alpha = spec.alpha();
    let lhs = rl_derivative_u(&p.dilate(lambda.powf(alpha)), ord, spec.eval(x)?)?;
    let rhs = lambda.powf(ord.beta * alpha) * rl_derivative_u(p, ord, spec.eval(lambda * x)?)?;
    Ok((lhs, rhs))
}

/// `Γ(η+1) / Γ(η+β+1) u^(η+β)`: the closed-form integral of `u^η`.
pub fn power_rule_integral(eta: f64, beta: f64, u: f64) -> Result<f64> {
    Ok(gamma_f(eta + 1.0)? * rgamma(eta + beta + 1.0) * u.powf(eta + beta))
}

/// `Γ(η+1) / Γ(η-β+1) u^(η-β)`: the closed-form derivative of `u^η`.
pub fn power_rule_derivative(eta: f64, beta: f64, u: f64) -> Result<f64> {
    Ok(gamma_f(eta + 1.0)? * rgamma(eta - beta + 1.0) * u.powf(eta - beta))
}
