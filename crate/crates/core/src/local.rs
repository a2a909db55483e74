//! The local `F^α` derivative and integral.
//!
//! Through the conjugacy `f(x) = g(S(x))` the `F^α` derivative at a point of
//! the set is `g'(S(x))`, and the staircase integral of `f` over `[a, b]` is
//! the ordinary integral of `g` over `[S(a), S(b)]`.

use crate::diff;
use crate::quad::{self, QuadOptions};
use crate::{CantorSpec, Error, GridSeries, Profile, Result};

/// `k`-th derivative of the profile at `u`, by Richardson-extrapolated finite
/// differences. One-sided stencils are used within reach of `u = 0`.
pub fn derivative_u(p: &Profile, u: f64, order: u32) -> Result<f64> {
    if order == 0 {
        return p.try_eval(u);
    }
    let h = diff::default_step(order);
    let reach = if order == 3 { 2.0 } else { 1.0 };
    let (lo, hi) = if u - reach * h >= 0.0 {
        (u - reach * h, u + reach * h)
    } else {
        (u, u + 4.0 * h)
    };
    p.check_clear_of_singularities(lo, hi)?;
    diff::derivative(|t| p.try_eval(t), u, order, h, 0.0)
}

/// `D_F^α f(x)`: `g'(S(x))` on the set and zero off it.
pub fn falpha_derivative(spec: &CantorSpec, p: &Profile, x: f64) -> Result<f64> {
    let u = spec.eval(x)?;
    if !spec.contains(x)? {
        return Ok(0.0);
    }
    derivative_u(p, u, 1)
}

/// The conjugate derivative `g'(S(x))` at every `x`, ignoring membership.
pub fn conjugate_derivative(spec: &CantorSpec, p: &Profile, x: f64) -> Result<f64> {
    derivative_u(p, spec.eval(x)?, 1)
}

/// `∫_{ua}^{ub} g(u) du` to an absolute tolerance of `1e-10`.
pub fn integral_u(p: &Profile, ua: f64, ub: f64) -> Result<f64> {
    if ua == ub {
        return Ok(0.0);
    }
    let opts = QuadOptions {
        abs_tol: 1e-10,
        rel_tol: 1e-13,
        ..QuadOptions::default()
    };
    quad::integrate(|u| p.eval(u), ua, ub, &opts).map(|r| r.value)
}

/// `∫_a^b f d_F^α x`, the Riemann-Stieltjes integral against the staircase.
pub fn falpha_integral(spec: &CantorSpec, p: &Profile, a: f64, b: f64) -> Result<f64> {
    if !(a <= b) {
        return Err(Error::InvalidParameter(format!(
            "integration bounds out of order: [{a}, {b}]"
        )));
    }
    let ua = spec.eval(a)?;
    let ub = spec.eval(b)?;
    integral_u(p, ua, ub)
}

/// `n` evenly spaced points on the domain with `x`, `s` and `value = g(s)`.
pub fn sample_series(spec: &CantorSpec, p: &Profile, n: usize) -> Result<GridSeries> {
    let mut series = GridSeries::uniform(spec, n)?;
    let values = series.s().iter().map(|&u| p.try_eval(u).ok()).collect();
    series.push_column("value", values)?;
    series.set_meta("profile", p.description());
    series.set_meta("n", n.to_string());
    Ok(series)
}

/// The antiderivative profile `u -> ∫_0^u g`.
pub fn antiderivative(p: &Profile) -> Profile {
    let inner = p.clone();
    Profile::new(format!("int_0^u {}", p.description()), move |u| {
        integral_u(&inner, 0.0, u).unwrap_or(f64::NAN)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_examples() {
        let spec = CantorSpec::triadic();
        let d = falpha_derivative(&spec, &Profile::exp(-1.0), 1.0).unwrap();
        assert!((d + (-1.0f64).exp()).abs() < 1e-9);
        let zero = falpha_derivative(&spec, &Profile::constant(1.0), 0.25).unwrap();
        assert_eq!(zero, 0.0);
        let unit = falpha_derivative(&spec, &Profile::identity(), 1.0 / 3.0).unwrap();
        assert!((unit - 1.0).abs() < 1e-9);
    }

    #[test]
    fn derivative_vanishes_off_the_set() {
        let spec = CantorSpec::triadic();
        assert_eq!(falpha_derivative(&spec, &Profile::identity(), 0.5).unwrap(), 0.0);
        let c = conjugate_derivative(&spec, &Profile::identity(), 0.5).unwrap();
        assert!((c - 1.0).abs() < 1e-9);
    }

    #[test]
    fn derivative_near_singularity_fails() {
        let spec = CantorSpec::triadic();
        let p = Profile::power(-0.5);
        assert_eq!(falpha_derivative(&spec, &p, 0.0), Err(Error::Singular { at: 0.0 }));
        let nan = Profile::new("nan above 0.5", |u| if u > 0.5 { f64::NAN } else { u });
        assert!(matches!(derivative_u(&nan, 0.5, 1), Err(Error::Singular { .. })));
    }

    #[test]
    fn eigenfunction() {
        let spec = CantorSpec::triadic();
        let p = Profile::exp(1.0);
        for &x in &[0.0, 0.25, 2.0 / 9.0, 0.75, 1.0] {
            let u = spec.eval(x).unwrap();
            let d = falpha_derivative(&spec, &p, x).unwrap();
            assert!((d - u.exp()).abs() < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn integral_examples() {
        let spec = CantorSpec::triadic();
        let half = falpha_integral(&spec, &Profile::identity(), 0.0, 1.0).unwrap();
        assert!((half - 0.5).abs() < 1e-12);
        let one = falpha_integral(&spec, &Profile::constant(1.0), 0.0, 1.0).unwrap();
        assert!((one - 1.0).abs() < 1e-12);
        let gap = falpha_integral(&spec, &Profile::constant(1.0), 0.4, 0.6).unwrap();
        assert_eq!(gap, 0.0);
        assert!(falpha_integral(&spec, &Profile::identity(), 0.6, 0.4).is_err());
        assert!(falpha_integral(&spec, &Profile::identity(), 0.0, 1.5).is_err());
    }

    #[test]
    fn sampling() {
        let spec = CantorSpec::triadic();
        let g = sample_series(&spec, &Profile::identity(), 3).unwrap();
        assert_eq!(g.x(), &[0.0, 0.5, 1.0]);
        assert_eq!(g.s(), &[0.0, 0.5, 1.0]);
        let e = sample_series(&spec, &Profile::exp(-1.0), 2).unwrap();
        assert_eq!(e.values("value").unwrap(), &[Some(1.0), Some((-1.0f64).exp())]);
        let c = sample_series(&spec, &Profile::constant(1.0), 5).unwrap();
        assert!(c.values("value").unwrap().iter().all(|v| *v == Some(1.0)));
        assert!(sample_series(&spec, &Profile::identity(), 1).is_err());
    }

    #[test]
    fn fundamental_theorem() {
        let spec = CantorSpec::triadic();
        let g = Profile::new("cos", f64::cos);
        let big_g = antiderivative(&g);
        for &x in &[0.1, 0.3, 2.0 / 3.0, 0.9] {
            let d = conjugate_derivative(&spec, &big_g, x).unwrap();
            let expect = spec.eval(x).unwrap().cos();
            assert!((d - expect).abs() < 1e-6, "x = {x}: {d} vs {expect}");
        }
    }
}
