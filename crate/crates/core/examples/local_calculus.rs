//! The local F^α derivative and staircase integral.
//!
//! On the set the derivative of `f = g(S(x))` is `g'(S(x))`; in the gaps it
//! vanishes. The staircase integral over `[a, b]` is `∫ g` over `[S(a), S(b)]`.

use fractal_calculus::{local, CantorSpec, Profile, Result};

fn main() -> Result<()> {
    let spec = CantorSpec::triadic();
    let f = Profile::power(2.0);

    println!("f = S(x)^2");
    println!("{:>10} {:>10} {:>7} {:>12}", "x", "S(x)", "in F", "D_F f");
    for x in [0.0, 0.2, 0.25, 0.5, 2.0 / 3.0, 0.75, 8.0 / 9.0, 1.0] {
        let v = spec.value(x)?;
        let d = local::falpha_derivative(&spec, &f, x)?;
        println!("{:>10.6} {:>10.6} {:>7} {:>12.8}", x, v.s, v.in_set, d);
    }

    // ∫_0^1 S^2 dS = 1/3, and ∫_{1/3}^{2/3} picks up nothing: S is flat there
    let whole = local::falpha_integral(&spec, &f, 0.0, 1.0)?;
    let gap = local::falpha_integral(&spec, &f, 1.0 / 3.0 + 1e-9, 2.0 / 3.0 - 1e-9)?;
    println!("integral over [0, 1]    = {whole:.12}");
    println!("integral over the gap   = {gap:.12}");

    let series = local::sample_series(&spec, &Profile::exp(-1.0), 9)?;
    print!("{}", series.to_csv());
    Ok(())
}
