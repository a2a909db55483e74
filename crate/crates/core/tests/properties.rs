mod common;

use fractal_calculus::nonlocal::{self, OrderPair};
use fractal_calculus::special::{mittag_leffler, MLParams};
use fractal_calculus::{laplace, CantorSpec, Profile, TRIADIC_DIMENSION};
use proptest::prelude::*;

type Operator = fn(&CantorSpec, &Profile, &OrderPair, f64) -> fractal_calculus::Result<f64>;

fn triadic() -> CantorSpec {
    CantorSpec::triadic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn staircase_is_monotone(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let spec = triadic();
        prop_assert!(spec.eval(lo).unwrap() <= spec.eval(hi).unwrap());
    }

    #[test]
    fn staircase_is_antisymmetric_about_one_half(x in 0.5f64..=1.0) {
        // 1 - x is exact for x in [1/2, 1]
        let spec = triadic();
        let sum = spec.eval(x).unwrap() + spec.eval(1.0 - x).unwrap();
        prop_assert!((sum - 1.0).abs() <= 2.0 * f64::EPSILON, "sum = {}", sum);
    }

    #[test]
    fn staircase_right_third_copy(x in 0.0f64..=1.0) {
        let spec = triadic();
        let lhs = spec.eval(2.0 / 3.0 + x / 3.0).unwrap();
        let rhs = 0.5 + 0.5 * spec.eval(x).unwrap();
        // the rounded argument moves S by at most (ulp)^alpha
        prop_assert!((lhs - rhs).abs() < 1e-9, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn staircase_matches_interval_counting(x in 0.0f64..=1.0) {
        let got = triadic().eval(x).unwrap();
        prop_assert!((got - common::cantor_by_counting(x)).abs() < 1e-9);
    }

    #[test]
    fn inverse_lands_on_the_plateau(k in 0u32..=(1 << 20)) {
        let spec = triadic();
        let s = k as f64 / (1u32 << 20) as f64;
        prop_assert_eq!(spec.eval(spec.inverse(s).unwrap()).unwrap(), s);
    }

    #[test]
    fn mittag_leffler_recurrence(eta in 0.5f64..2.0, nu in 0.3f64..2.0, z in -3.0f64..3.0) {
        let lhs = mittag_leffler(&MLParams::new(eta, nu).unwrap(), z).unwrap();
        let shifted = mittag_leffler(&MLParams::new(eta, nu + eta).unwrap(), z).unwrap();
        let rhs = z * shifted + common::rgamma(nu);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0), "{} vs {}", lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scale_law_on_power_profiles(
        beta in 0.1f64..0.9,
        eta in 0.5f64..3.0,
        x in 0.1f64..=1.0,
        m in 1i32..=2,
    ) {
        let spec = triadic();
        let ord = OrderPair::for_spec(&spec, beta).unwrap();
        let lambda = 3f64.powi(-m);
        let (l, r) = nonlocal::scale_check(&spec, &Profile::power(eta), &ord, lambda, x).unwrap();
        prop_assert!(common::rel_err(l, r) < 1e-5, "{} vs {}", l, r);
    }

    #[test]
    fn operators_are_linear(
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
        beta in 0.1f64..0.9,
        x in 0.2f64..=1.0,
    ) {
        let spec = triadic();
        let ord = OrderPair::for_spec(&spec, beta).unwrap();
        let f = Profile::exp(-1.0);
        let g = Profile::power(1.5);
        let combo = f.scale(a).add(&g.scale(b));
        let ops: [Operator; 3] = [nonlocal::rl_integral, nonlocal::rl_derivative, nonlocal::caputo_derivative];
        for op in ops {
            let whole = op(&spec, &combo, &ord, x).unwrap();
            let parts = a * op(&spec, &f, &ord, x).unwrap() + b * op(&spec, &g, &ord, x).unwrap();
            prop_assert!((whole - parts).abs() < 1e-8 * (1.0 + parts.abs()), "{} vs {}", whole, parts);
        }
    }

    #[test]
    fn transform_is_linear(a in -2.0f64..2.0, b in -2.0f64..2.0, s in 0.5f64..6.0) {
        let tol = laplace::DEFAULT_TOLERANCE;
        let f = Profile::exp(-0.5);
        let g = Profile::power(2.0);
        let whole = laplace::forward_transform(&f.scale(a).add(&g.scale(b)), s, tol).unwrap();
        let parts = a * laplace::forward_transform(&f, s, tol).unwrap()
            + b * laplace::forward_transform(&g, s, tol).unwrap();
        prop_assert!((whole - parts).abs() < 1e-9 * (1.0 + parts.abs()));
    }

    #[test]
    fn integral_then_derivative_is_identity(beta in 0.1f64..0.6, x in 0.2f64..=1.0) {
        let spec = triadic();
        let ord = OrderPair::for_spec(&spec, beta).unwrap();
        let g = Profile::exp(-1.0);
        let integrated = {
            let (g, ord) = (g.clone(), ord);
            Profile::new("I^b exp(-u)", move |u| nonlocal::rl_integral_u(&g, &ord, u).unwrap_or(f64::NAN))
        };
        let back = nonlocal::rl_derivative(&spec, &integrated, &ord, x).unwrap();
        let want = g.eval(spec.eval(x).unwrap());
        prop_assert!(common::rel_err(back, want) < 1e-5, "{} vs {}", back, want);
    }
}

#[test]
fn mittag_leffler_is_nonnegative_and_decreasing_on_the_negative_axis() {
    for eta in [0.25, 0.33, 0.5, TRIADIC_DIMENSION, 1.0] {
        for nu in [eta, TRIADIC_DIMENSION.max(eta), 1.0] {
            let p = MLParams::new(eta, nu).unwrap();
            let mut prev = f64::INFINITY;
            // small eta at large |z| needs more terms than plain summation allows
            for k in 0..=40 {
                let z = -0.05 * k as f64;
                let v = mittag_leffler(&p, z).unwrap();
                assert!(v >= 0.0 && v <= prev, "eta {eta} nu {nu} z {z}: {v} after {prev}");
                prev = v;
            }
        }
    }
}
