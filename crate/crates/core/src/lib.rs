//! Local and non-local calculus on the triadic Cantor set.
//!
//! Every function supported on the Cantor set `F` is carried by its *profile*
//! `g`, the function of the staircase coordinate `u = S(x)` for which
//! `f(x) = g(S(x))`. In that coordinate the local `F^α` derivative is the
//! ordinary derivative `g'(u)`, the staircase integral is the ordinary integral
//! of `g`, and the non-local Riemann-Liouville, Caputo and Grünwald operators
//! act as classical fractional operators on `g`.
//!
//! | module | contents |
//! |--------|----------|
//! | [`staircase`] | exact staircase function, its inverse, Cantor membership |
//! | [`local`] | `F^α` derivative and integral, grid sampling |
//! | [`nonlocal`] | Riemann-Liouville, Caputo and Grünwald operators, scale law |
//! | [`special`] | gamma and Mittag-Leffler functions |
//! | [`laplace`] | forward transform, derivative rules, closed-form inversions |
//! | [`ode`] | the linear local and non-local model equations |
//! | [`physics`] | tautochrone and Blair viscoelastic models |
//! | [`cli`] | the `fcalc` command line front end |
//!
//! ```
//! use fractal_calculus::{local, CantorSpec, Profile};
//!
//! let spec = CantorSpec::triadic();
//! // 0.2 lies in the gap (1/9, 2/9) where S is flat at 1/4
//! assert_eq!(spec.eval(0.2).unwrap(), 0.25);
//!
//! // y = exp(-S(x)) solves D_F y + y = 0
//! let y = Profile::exp(-1.0);
//! let dy = local::falpha_derivative(&spec, &y, 1.0).unwrap();
//! assert!((dy + (-1.0f64).exp()).abs() < 1e-8);
//! ```

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// quadrature nodes are kept at full published precision
#![allow(clippy::excessive_precision)]

pub mod cli;
mod diff;
mod error;
pub mod laplace;
pub mod local;
pub mod nonlocal;
pub mod ode;
pub mod physics;
mod profile;
pub mod quad;
pub mod selfcheck;
mod series;
pub mod special;
pub mod staircase;

pub use error::{Error, Result};
pub use nonlocal::OrderPair;
pub use profile::Profile;
pub use series::{format_float, Column, GridSeries};
pub use staircase::{CantorSpec, Construction, StaircaseValue, TRIADIC_DIMENSION};
