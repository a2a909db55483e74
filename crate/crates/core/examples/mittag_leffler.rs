//! Mittag-Leffler functions by forward series summation.

use fractal_calculus::special::{mittag_leffler, mittag_leffler_eval, MLParams};
use fractal_calculus::{Result, TRIADIC_DIMENSION};

fn main() -> Result<()> {
    println!(
        "E_1,1(1)       = {:.15} (e = {:.15})",
        mittag_leffler(&MLParams::new(1.0, 1.0)?, 1.0)?,
        std::f64::consts::E
    );
    let z = -std::f64::consts::PI.powi(2) / 4.0;
    println!(
        "E_2,1(-pi^2/4) = {:.3e} (cos(pi/2))",
        mittag_leffler(&MLParams::new(2.0, 1.0)?, z)?
    );

    // the kernel of the non-local relaxation: E_{β,α}(-u^β)
    println!("{:>6} {:>14} {:>14}", "u", "beta=0.33", "beta=0.25");
    for i in 0..=10 {
        let u = i as f64 / 10.0;
        let a = mittag_leffler(&MLParams::new(0.33, TRIADIC_DIMENSION)?, -u.powf(0.33))?;
        let b = mittag_leffler(&MLParams::new(0.25, TRIADIC_DIMENSION)?, -u.powf(0.25))?;
        println!("{u:>6.2} {a:>14.10} {b:>14.10}");
    }

    // the largest term bounds how much precision cancellation can cost
    for z in [-1.0, -10.0, -20.0] {
        let e = mittag_leffler_eval(&MLParams::new(1.0, 1.0)?, z)?;
        let lost = e.max_term * f64::EPSILON / e.value.abs();
        println!(
            "E_1,1({z}) = {:.6e} after {} terms, relative error bound {lost:.1e}",
            e.value, e.terms
        );
    }
    Ok(())
}
