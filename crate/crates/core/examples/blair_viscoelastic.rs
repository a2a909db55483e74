//! The Blair element under a step strain on the Cantor set.
//!
//! `β = 0` is a spring, `β = α` a dashpot; in between the stress relaxes as
//! `E χ^β S(t)^(-β) / Γ(1-β)`.

use fractal_calculus::physics::{self, BlairParams};
use fractal_calculus::{CantorSpec, Profile, Result};

fn main() -> Result<()> {
    let spec = CantorSpec::triadic();
    let step = Profile::characteristic();
    let base = BlairParams::new(1.0, 1.0, 0.0)?;
    let sweep = physics::blair_sweep(&spec, &base, &[0.0, 0.25, 0.5, 0.6], &step, 18)?;
    print!("{}", sweep.to_csv());

    let p = base.with_beta(0.5)?;
    for t in [0.1, 0.5, 1.0] {
        let s = physics::blair_stress(&spec, &p, &step, t)?;
        let c = physics::blair_step_closed_form(&p, spec.eval(t)?);
        println!("t = {t}: operator {s:.10}, closed form {c:.10}");
    }
    let newton = base.with_beta(spec.alpha())?;
    println!(
        "beta = alpha: stress {}",
        physics::blair_stress(&spec, &newton, &step, 0.5)?
    );
    Ok(())
}
