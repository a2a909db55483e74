//! The local and non-local relaxation equations.
//!
//! `D_F y = -y` has the solution `exp(-S(x))`; the Caputo version of order
//! `β` is solved by `S^(α-1) E_{β,α}(-S^β)` and, independently, by a
//! Grünwald march.

use fractal_calculus::ode::{self, LinearFdeProblem};
use fractal_calculus::Result;

fn main() -> Result<()> {
    let local = ode::solve_local(&LinearFdeProblem::local().with_grid(16))?;
    print!("{}", local.to_csv());

    for beta in [0.33, 0.25] {
        let prob = LinearFdeProblem::nonlocal(beta).with_grid(1024);
        let closed = ode::nonlocal_profile(&prob)?;
        let marched = ode::gl_stepper(&prob)?;
        let mut worst = 0.0f64;
        for (&u, v) in marched.s().iter().zip(marched.values("value")?) {
            if let (true, Some(v)) = (u >= 0.1, v) {
                worst = worst.max(((v - closed.eval(u)) / closed.eval(u)).abs());
            }
        }
        println!(
            "beta = {beta}: y(1) = {:.10}, Grünwald march max rel gap on u >= 0.1: {worst:.2e}",
            closed.eval(1.0)
        );
    }

    let a = ode::solve_local(&LinearFdeProblem::local().with_grid(64))?;
    let b = ode::solve_nonlocal(&LinearFdeProblem::nonlocal(0.33).with_grid(64))?;
    let gap = ode::compare_runs(&a, &b)?;
    println!("local vs non-local: {:?}", gap.meta());
    Ok(())
}
