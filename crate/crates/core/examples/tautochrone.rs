//! The fractal tautochrone: a density whose half-order integral is constant,
//! so the descent time does not depend on the release height.

use fractal_calculus::physics::{self, TautochroneParams};
use fractal_calculus::{CantorSpec, Result};

fn main() -> Result<()> {
    let spec = CantorSpec::triadic();
    let params = TautochroneParams::new(9.81, 1.5)?;
    println!("c = {:.10}", params.coefficient());
    let ys: Vec<f64> = (1..=12).map(|i| i as f64 / 12.0).collect();
    let g = physics::tautochrone_solve(&spec, &params, &ys)?;
    print!("{}", g.to_csv());
    Ok(())
}
