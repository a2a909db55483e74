//! Compact oracle checks behind `fcalc selfcheck`.
//!
//! Each check compares a library result against an independent computation
//! (closed form, brute-force recursion or a second algorithm) and reports the
//! worst deviation next to its limit.

use std::fmt::Write as _;

use crate::laplace::{self, RationalSExpr};
use crate::nonlocal::{self, OrderPair};
use crate::ode::{self, LinearFdeProblem};
use crate::physics::{self, BlairParams, TautochroneParams};
use crate::special::{mittag_leffler, MLParams};
use crate::{local, CantorSpec, Profile, Result, TRIADIC_DIMENSION};

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = (&'static str, f64, fn() -> Result<f64>);

const CHECKS: [Check; 11] = [
    ("staircase vs interval recursion", 1e-9, staircase_oracle),
    ("staircase self-similarity", 1e-15, self_similarity),
    ("power rules", 1e-6, power_rules),
    ("grunwald sum", 1e-3, grunwald),
    ("scale law", 1e-5, scale_law),
    ("laplace table", 1e-5, laplace_table),
    ("local relaxation residual", 1e-5, relaxation_residual),
    ("relaxation transform", 1e-4, relaxation_transform),
    ("mittag-leffler reference", 1e-10, mittag_leffler_reference),
    ("tautochrone descent time", 1e-3, tautochrone),
    ("blair closed form", 1e-6, blair),
];

/// Runs every check; a check that errors counts as failed.
pub fn run_all() -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(name, limit, check)| match check() {
            Ok(err) => CheckResult {
                name,
                passed: err <= limit,
                detail: format!("max err {err:.3e} (limit {limit:.0e})"),
            },
            Err(e) => CheckResult {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

/// Fixed-width pass/fail table.
pub fn render(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status}  {:<32} {}", r.name, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", results.len());
    out
}

/// Cantor function by recursion on the interval containing `x`, tracked in
/// the interval's own coordinate `y ∈ [0, 1]`.
pub fn interval_oracle(x: f64, depth: u32) -> f64 {
    let mut y = x;
    let (mut s, mut weight) = (0.0, 0.5);
    for _ in 0..depth {
        y *= 3.0;
        if y > 1.0 && y < 2.0 {
            return s + weight;
        }
        if y >= 2.0 {
            s += weight;
            y -= 2.0;
        }
        weight *= 0.5;
    }
    s + weight
}

fn staircase_oracle() -> Result<f64> {
    let spec = CantorSpec::triadic();
    let mut worst = 0.0f64;
    for i in 0..=2000 {
        let x = (i as f64 * 0.618_033_988_749_894_9).fract();
        worst = worst.max((spec.eval(x)? - interval_oracle(x, 40)).abs());
    }
    Ok(worst)
}

fn self_similarity() -> Result<f64> {
    let spec = CantorSpec::triadic();
    let mut worst = 0.0f64;
    for i in 1..=200 {
        let x = (i as f64 * 0.414_213_562_373_095_1).fract();
        worst = worst.max((spec.eval(x / 3.0)? - 0.5 * spec.eval(x)?).abs());
    }
    Ok(worst)
}

fn power_rules() -> Result<f64> {
    let mut worst = 0.0f64;
    for eta in [0.5, 2.0] {
        for beta in [0.25, 0.75] {
            let ord = OrderPair::new(TRIADIC_DIMENSION, beta)?;
            let p = Profile::power(eta);
            for u in [0.3, 1.0] {
                let i = nonlocal::rl_integral_u(&p, &ord, u)?;
                let ie = nonlocal::power_rule_integral(eta, beta, u)?;
                let d = nonlocal::rl_derivative_u(&p, &ord, u)?;
                let de = nonlocal::power_rule_derivative(eta, beta, u)?;
                worst = worst.max(((i - ie) / ie).abs()).max(((d - de) / de).abs());
            }
        }
    }
    Ok(worst)
}

fn grunwald() -> Result<f64> {
    let ord = OrderPair::new(TRIADIC_DIMENSION, 0.5)?;
    let p = Profile::power(2.0);
    let g = nonlocal::grunwald_u(&p, &ord, 1.0, 1 << 14)?;
    let q = nonlocal::rl_derivative_u(&p, &ord, 1.0)?;
    Ok((g - q).abs())
}

fn scale_law() -> Result<f64> {
    let spec = CantorSpec::triadic();
    let mut worst = 0.0f64;
    for lambda in [1.0 / 3.0, 1.0 / 9.0] {
        let ord = OrderPair::for_spec(&spec, 0.3)?;
        let (l, r) = nonlocal::scale_check(&spec, &Profile::power(1.5), &ord, lambda, 0.8)?;
        worst = worst.max(((l - r) / r).abs());
    }
    Ok(worst)
}

fn laplace_table() -> Result<f64> {
    let mut worst = 0.0f64;
    for f in laplace::default_fixtures()? {
        let c = f.compute()?;
        worst = worst.max(((c - f.expected) / f.expected).abs());
    }
    Ok(worst)
}

fn relaxation_transform() -> Result<f64> {
    let mut worst = 0.0f64;
    for beta in [0.33, 0.25] {
        let prob = LinearFdeProblem::nonlocal(beta);
        let p = ode::nonlocal_profile(&prob)?;
        for s in [2.0f64, 5.0] {
            let f = laplace::forward_transform(&p, s, laplace::DEFAULT_TOLERANCE)?;
            let e = s.powf(beta - TRIADIC_DIMENSION) / (1.0 + s.powf(beta));
            worst = worst.max(((f - e) / e).abs());
        }
    }
    let l2 = RationalSExpr::Lemma2 {
        zeta: 1.0,
        mu: 1.0,
        a: 1.0,
    };
    Ok(worst.max(laplace::roundtrip_check(&l2, &[2.0, 3.0])?))
}

fn mittag_leffler_reference() -> Result<f64> {
    // 50-digit references
    let cases = [
        (0.5, 0.6309, -1.0, 0.220_511_860_835_071_5),
        (0.5, TRIADIC_DIMENSION, -1.0, 0.220_530_672_755_974_6),
        (0.5, 1.0, -1.0, 0.427_583_576_155_807),
        (1.5, 0.5, -3.0, -0.613_999_317_468_755_3),
    ];
    let mut worst = 0.0f64;
    for (eta, nu, z, expect) in cases {
        worst = worst.max((mittag_leffler(&MLParams::new(eta, nu)?, z)? - expect).abs());
    }
    Ok(worst)
}

fn tautochrone() -> Result<f64> {
    let params = TautochroneParams::new(9.81, 1.5)?;
    let g = physics::tautochrone_solve(&CantorSpec::triadic(), &params, &[0.05, 0.3, 0.7, 1.0])?;
    let times: Vec<f64> = g.values("descent_time")?.iter().flatten().copied().collect();
    Ok(times
        .iter()
        .map(|t| ((t - params.t) / params.t).abs())
        .fold(0.0, f64::max))
}

fn blair() -> Result<f64> {
    let spec = CantorSpec::triadic();
    let mut worst = 0.0f64;
    for beta in [0.25, 0.5, 0.6] {
        let p = BlairParams::new(1.0, 1.0, beta)?;
        for t in [0.1, 0.5, 1.0] {
            let s = physics::blair_stress(&spec, &p, &Profile::characteristic(), t)?;
            let c = physics::blair_step_closed_form(&p, spec.eval(t)?);
            worst = worst.max(((s - c) / c).abs());
        }
    }
    Ok(worst)
}

fn relaxation_residual() -> Result<f64> {
    let prob = LinearFdeProblem::local();
    let y = ode::local_profile(&prob);
    let mut worst = 0.0f64;
    for x in [2.0 / 9.0, 2.0 / 3.0, 20.0 / 27.0, 1.0] {
        let r = local::falpha_derivative(&prob.spec, &y, x)? + y.eval(prob.spec.eval(x)?);
        worst = worst.max(r.abs());
    }
    Ok(worst)
}
