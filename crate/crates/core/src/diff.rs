//! Finite-difference derivatives with one level of Richardson extrapolation.

use crate::{Error, Result};

/// Step for first derivatives.
pub(crate) const FIRST_ORDER_STEP: f64 = 1e-6;

/// Default step for derivative order `k`.
pub(crate) fn default_step(order: u32) -> f64 {
    match order {
        0 | 1 => FIRST_ORDER_STEP,
        2 => 1e-3,
        _ => 1e-2,
    }
}

/// `k`-th derivative of `f` at `x` for `k` in `0..=3`.
///
/// Uses central stencils when they stay at or above `lower`, and second-order
/// one-sided stencils otherwise. Both are combined with a half step as
/// `(4 D(h/2) - D(h)) / 3`.
pub(crate) fn derivative<F>(f: F, x: f64, order: u32, h: f64, lower: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if order == 0 {
        return f(x);
    }
    if order > 3 {
        return Err(Error::InvalidParameter(format!(
            "finite differences support orders up to 3, got {order}"
        )));
    }
    let reach = if order == 3 { 2.0 } else { 1.0 };
    let central = x - reach * h >= lower;
    let estimate = |h: f64| -> Result<f64> {
        if central {
            central_difference(&f, x, order, h)
        } else {
            forward_difference(&f, x, order, h)
        }
    };
    let coarse = estimate(h)?;
    let fine = estimate(h / 2.0)?;
    let d = (4.0 * fine - coarse) / 3.0;
    if d.is_finite() {
        Ok(d)
    } else {
        Err(Error::Singular { at: x })
    }
}

fn central_difference<F: Fn(f64) -> Result<f64>>(f: &F, x: f64, order: u32, h: f64) -> Result<f64> {
    Ok(match order {
        1 => (f(x + h)? - f(x - h)?) / (2.0 * h),
        2 => (f(x + h)? - 2.0 * f(x)? + f(x - h)?) / (h * h),
        _ => (f(x + 2.0 * h)? - 2.0 * f(x + h)? + 2.0 * f(x - h)? - f(x - 2.0 * h)?) / (2.0 * h * h * h),
    })
}

fn forward_difference<F: Fn(f64) -> Result<f64>>(f: &F, x: f64, order: u32, h: f64) -> Result<f64> {
    Ok(match order {
        1 => (-3.0 * f(x)? + 4.0 * f(x + h)? - f(x + 2.0 * h)?) / (2.0 * h),
        2 => (2.0 * f(x)? - 5.0 * f(x + h)? + 4.0 * f(x + 2.0 * h)? - f(x + 3.0 * h)?) / (h * h),
        _ => {
            (-5.0 * f(x)? + 18.0 * f(x + h)? - 24.0 * f(x + 2.0 * h)? + 14.0 * f(x + 3.0 * h)? - 3.0 * f(x + 4.0 * h)?)
                / (2.0 * h * h * h)
        }
    })
}
