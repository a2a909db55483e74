//! Riemann-Liouville, Caputo and Grünwald operators on the fractal.
//!
//! Compares each operator on `S^η` with its power-rule closed form and shows
//! the first-order convergence of the Grünwald sum.

use fractal_calculus::nonlocal::{self, OrderPair};
use fractal_calculus::{CantorSpec, Profile, Result};

fn main() -> Result<()> {
    let spec = CantorSpec::triadic();
    let x = 0.8;
    let u = spec.eval(x)?;
    println!("x = {x}, S(x) = {u:.9}");
    println!(
        "{:>5} {:>5} {:>14} {:>14} {:>14} {:>14}",
        "eta", "beta", "I^b", "closed", "D^b", "closed"
    );
    for eta in [0.5, 1.0, 2.0] {
        for beta in [0.25, 0.5, 0.75] {
            let ord = OrderPair::for_spec(&spec, beta)?;
            let p = Profile::power(eta);
            let i = nonlocal::rl_integral(&spec, &p, &ord, x)?;
            let d = nonlocal::rl_derivative(&spec, &p, &ord, x)?;
            println!(
                "{eta:>5} {beta:>5} {i:>14.10} {:>14.10} {d:>14.10} {:>14.10}",
                nonlocal::power_rule_integral(eta, beta, u)?,
                nonlocal::power_rule_derivative(eta, beta, u)?
            );
        }
    }

    // Caputo annihilates constants, Riemann-Liouville does not
    let ord = OrderPair::for_spec(&spec, 0.5)?;
    let one = Profile::constant(1.0);
    println!(
        "constant: RL = {:.10}, Caputo = {:.10}",
        nonlocal::rl_derivative(&spec, &one, &ord, x)?,
        nonlocal::caputo_derivative(&spec, &one, &ord, x)?
    );

    let p = Profile::power(2.0);
    let exact = nonlocal::rl_derivative(&spec, &p, &ord, x)?;
    let mut previous: Option<f64> = None;
    println!("{:>7} {:>12} {:>7}", "terms", "error", "ratio");
    for k in 8..=14 {
        let n = 1usize << k;
        let err = (nonlocal::grunwald_derivative(&spec, &p, &ord, x, n)? - exact).abs();
        let ratio = previous.map(|e| e / err).unwrap_or(f64::NAN);
        println!("{n:>7} {err:>12.3e} {ratio:>7.3}");
        previous = Some(err);
    }

    // the scale-change law under λ = 1/3
    let (l, r) = nonlocal::scale_check(&spec, &p, &ord, 1.0 / 3.0, x)?;
    println!("scale law: {l:.10} vs {r:.10}");
    Ok(())
}
