//! Two applications of the half-order and general-order operators.
//!
//! **Tautochrone.** A bead released at height `y` reaches the bottom in the
//! same time `T` wherever it starts when the arc-length density `f` obeys
//! the half-order Abel relation. In the staircase coordinate the solution is
//! `f(u) = c u^(-1/2)` with `c = √(2 g_F) T / π`. Applying the half-order
//! integral gives back `I^(1/2) f = √(2 g_F) T / √π`, a constant: the descent
//! time does not depend on the release height.
//!
//! **Blair element.** Stress is a fractional derivative of strain,
//! `σ = E χ^β D^β ε`, with memory index `β` between Hooke (`β = 0`) and
//! Newton (`β = α`). For a unit step strain, `σ = E χ^β S(t)^(-β) / Γ(1-β)`.

use std::f64::consts::PI;

use crate::nonlocal::{rl_derivative_u, rl_integral_u, OrderPair};
use crate::special::rgamma;
use crate::{format_float, CantorSpec, Error, GridSeries, Profile, Result};

/// Fractal gravitational constant and prescribed descent time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TautochroneParams {
    pub gf: f64,
    pub t: f64,
}

impl TautochroneParams {
    pub fn new(gf: f64, t: f64) -> Result<Self> {
        if !(gf > 0.0 && gf.is_finite()) {
            return Err(Error::range("gf", gf, "(0, inf)"));
        }
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::range("T", t, "(0, inf)"));
        }
        Ok(TautochroneParams { gf, t })
    }

    /// `c` in `f = c u^(-1/2)`.
    pub fn coefficient(&self) -> f64 {
        (2.0 * self.gf).sqrt() * self.t / PI
    }

    /// The constant `√(2 g_F) T / √π` that `I^(1/2) f` must equal.
    pub fn half_integral_level(&self) -> f64 {
        (2.0 * self.gf).sqrt() * self.t / PI.sqrt()
    }
}

/// The half order, taken in the staircase coordinate.
fn half() -> OrderPair {
    OrderPair::new(1.0, 0.5).expect("valid order")
}

/// `f(u) = c u^(-1/2)`.
pub fn tautochrone_profile(params: &TautochroneParams) -> Profile {
    Profile::power(-0.5).scale(params.coefficient())
}

/// Descent time recovered from `f` at staircase height `u`:
/// `T = √π I^(1/2) f(u) / √(2 g_F)`.
pub fn descent_time(params: &TautochroneParams, f: &Profile, u: f64) -> Result<f64> {
    let level = rl_integral_u(f, &half(), u)?;
    Ok(level * PI.sqrt() / (2.0 * params.gf).sqrt())
}

/// Samples the tautochrone on `y_grid` (strictly increasing, in `(0, L]`).
///
/// Columns: `f` and `descent_time`, the latter recomputed from `f` by
/// numerical half-order integration.
pub fn tautochrone_solve(spec: &CantorSpec, params: &TautochroneParams, y_grid: &[f64]) -> Result<GridSeries> {
    if let Some(&y) = y_grid.iter().find(|&&y| !(y > 0.0)) {
        return Err(Error::Singular { at: y });
    }
    if y_grid.is_empty() {
        return Err(Error::Shape("empty height grid".into()));
    }
    let mut g = GridSeries::on_grid_labeled(spec, "y", y_grid.to_vec())?;
    let f = tautochrone_profile(params);
    let values = g.s().iter().map(|&u| Some(f.eval(u))).collect();
    let times = g
        .s()
        .iter()
        .map(|&u| descent_time(params, &f, u).map(Some))
        .collect::<Result<Vec<_>>>()?;
    g.push_column("f", values)?;
    g.push_column("descent_time", times)?;
    g.set_meta("gf", format_float(params.gf));
    g.set_meta("T", format_float(params.t));
    g.set_meta("c", format_float(params.coefficient()));
    Ok(g)
}

/// Parameters of the Blair element: modulus `E`, ratio `χ = λ / E` and
/// memory index `β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlairParams {
    pub modulus: f64,
    pub chi: f64,
    pub beta: f64,
}

impl BlairParams {
    pub fn new(modulus: f64, chi: f64, beta: f64) -> Result<Self> {
        if !(modulus > 0.0 && modulus.is_finite()) {
            return Err(Error::range("E", modulus, "(0, inf)"));
        }
        if !(chi > 0.0 && chi.is_finite()) {
            return Err(Error::range("chi", chi, "(0, inf)"));
        }
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(Error::range("beta", beta, "[0, alpha]"));
        }
        Ok(BlairParams { modulus, chi, beta })
    }

    pub fn with_beta(self, beta: f64) -> Result<Self> {
        Self::new(self.modulus, self.chi, beta)
    }

    fn order(&self, spec: &CantorSpec) -> Result<OrderPair> {
        if self.beta > spec.alpha() {
            return Err(Error::range("beta", self.beta, format!("[0, {}]", spec.alpha())));
        }
        OrderPair::for_spec(spec, self.beta)
    }
}

/// `σ(t) = E χ^β D^β ε(t)`.
///
/// `β = 0` returns `E ε(t)`; `β = α` is the local derivative, so a constant
/// strain gives zero stress there.
pub fn blair_stress(spec: &CantorSpec, params: &BlairParams, strain: &Profile, t: f64) -> Result<f64> {
    if !(t > 0.0 && t <= spec.length()) {
        return Err(Error::range("t", t, format!("(0, {}]", spec.length())));
    }
    let ord = params.order(spec)?;
    let d = rl_derivative_u(strain, &ord, spec.eval(t)?)?;
    Ok(params.modulus * params.chi.powf(params.beta) * d)
}

/// Unit step strain: `σ = E χ^β u^(-β) / Γ(1-β)`.
pub fn blair_step_closed_form(params: &BlairParams, u: f64) -> f64 {
    params.modulus * params.chi.powf(params.beta) * u.powf(-params.beta) * rgamma(1.0 - params.beta)
}

/// Stress curves for several memory indices on `t_i = i L / n`, `i = 1..n`.
///
/// Columns: `strain` (the strain profile at `S(t)`), `in_set` (1 on the
/// Cantor set, 0 in the gaps) and one `beta_<β>` column per index.
pub fn blair_sweep(
    spec: &CantorSpec,
    base: &BlairParams,
    betas: &[f64],
    strain: &Profile,
    grid_n: usize,
) -> Result<GridSeries> {
    if grid_n < crate::ode::MIN_GRID {
        return Err(Error::InvalidParameter(format!(
            "grid_n must be at least {}, got {grid_n}",
            crate::ode::MIN_GRID
        )));
    }
    if betas.is_empty() {
        return Err(Error::InvalidParameter("no memory index given".into()));
    }
    let xs: Vec<f64> = (1..=grid_n).map(|i| spec.length() * i as f64 / grid_n as f64).collect();
    let mut g = GridSeries::on_grid_labeled(spec, "t", xs)?;
    let strain_values = g.s().iter().map(|&u| Some(strain.eval(u))).collect();
    let flags = g
        .x()
        .iter()
        .map(|&t| spec.contains(t).map(|b| Some(if b { 1.0 } else { 0.0 })))
        .collect::<Result<Vec<_>>>()?;
    g.push_column("strain", strain_values)?;
    g.push_column("in_set", flags)?;
    for &beta in betas {
        let params = base.with_beta(beta)?;
        let ord = params.order(spec)?;
        let scale = params.modulus * params.chi.powf(beta);
        let column = g
            .s()
            .iter()
            .map(|&u| rl_derivative_u(strain, &ord, u).map(|d| Some(scale * d)))
            .collect::<Result<Vec<_>>>()?;
        g.push_column(format!("beta_{beta}"), column)?;
    }
    g.set_meta("E", format_float(base.modulus));
    g.set_meta("chi", format_float(base.chi));
    g.set_meta("strain", strain.description());
    Ok(g)
}
