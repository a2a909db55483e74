//! Laplace transform pairs in the staircase coordinate.
//!
//! Inverts the rational forms in `s` with their series expansions and
//! transforms the result back numerically.

use fractal_calculus::laplace::{self, RationalSExpr};
use fractal_calculus::{CantorSpec, Profile, Result, TRIADIC_DIMENSION};

fn main() -> Result<()> {
    let spec = CantorSpec::triadic();
    let tol = laplace::DEFAULT_TOLERANCE;
    println!(
        "L[1](2) = {:.12}",
        laplace::forward_transform(&Profile::constant(1.0), 2.0, tol)?
    );
    println!(
        "L[S^2](1) = {:.12}",
        laplace::forward_transform(&Profile::power(2.0), 1.0, tol)?
    );

    let exprs = [
        RationalSExpr::Lemma2 {
            zeta: 1.0,
            mu: 1.0,
            a: 1.0,
        },
        RationalSExpr::Lemma2 {
            zeta: 0.33,
            mu: TRIADIC_DIMENSION,
            a: 1.0,
        },
        RationalSExpr::Lemma3 {
            zeta: 1.0,
            mu: 0.5,
            a: 0.2,
            n: 1,
        },
        RationalSExpr::Lemma4 {
            zeta: 1.0,
            mu: 0.5,
            xi: 0.25,
            a: 0.3,
            b: 0.5,
        },
    ];
    for e in exprs {
        let f = laplace::invert(&e, &spec, 0.75)?;
        let err = laplace::roundtrip_check(&e, &[2.0, 3.0, 5.0])?;
        println!("{e}: f(x=0.75) = {f:.10}, roundtrip rel err {err:.2e}");
    }

    // derivative rule and its non-local counterpart
    let f = laplace::forward_transform(&Profile::exp(-1.0), 2.0, tol)?;
    println!(
        "L[g'](2) = {:.12} (want -1/3)",
        laplace::derivative_rule(f, 2.0, 1, &[1.0])?
    );

    println!("{}", laplace::FIXTURE_HEADER);
    for fx in laplace::default_fixtures()?.iter().take(5) {
        println!(
            "{} s={} expected {:.12} computed {:.12}",
            fx.shape.name(),
            fx.s,
            fx.expected,
            fx.compute()?
        );
    }
    Ok(())
}
