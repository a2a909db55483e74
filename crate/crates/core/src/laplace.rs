//! Fractal Laplace transform in the staircase coordinate.
//!
//! `L[f](s) = ∫_0^∞ g(u) e^(-s u) du` where `f(x) = g(S(x))`. The transform
//! variable `s` is an ordinary real number in staircase units.
//!
//! Closed-form inversions are provided for three rational shapes:
//!
//! ```text
//! Lemma2  s^(ζ-μ) / (s^ζ + a)               ->  u^(μ-1) E_{ζ,μ}(-a u^ζ)
//! Lemma3  1 / (s^ζ + a s^μ)^(n+1)           ->  Σ_k C(n+k,k) (-a)^k u^(k(ζ-μ)+(n+1)ζ-1) / Γ(k(ζ-μ)+(n+1)ζ)
//! Lemma4  s^ξ / (s^ζ + a s^μ + b)           ->  Σ_n Σ_k C(n+k,k) (-b)^n (-a)^k u^(k(ζ-μ)+(n+1)ζ-ξ-1) / Γ(k(ζ-μ)+(n+1)ζ-ξ)
//! ```

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::diff;
use crate::nonlocal::{rl_integral_u, OrderPair};
use crate::quad::{self, QuadOptions};
use crate::series::format_float;
use crate::special::{gamma_f, mittag_leffler, MLParams};
use crate::{CantorSpec, Error, Profile, Result, TRIADIC_DIMENSION};

/// Default truncation tolerance of [`forward_transform`].
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Relative accuracy used to cut the double series of the `Lemma4` shape.
const SERIES_TOLERANCE: f64 = 1e-15;
const SERIES_CAP: usize = 400;

/// Largest `|a|` accepted when `ζ = μ`, where the inner sums are geometric in `a`.
pub const EQUAL_ORDER_RATIO_LIMIT: f64 = 0.9;

/// A rational expression in `s` with a closed-form inverse transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RationalSExpr {
    Lemma2 {
        zeta: f64,
        mu: f64,
        a: f64,
    },
    Lemma3 {
        zeta: f64,
        mu: f64,
        a: f64,
        n: u32,
    },
    Lemma4 {
        zeta: f64,
        mu: f64,
        xi: f64,
        a: f64,
        b: f64,
    },
}

impl RationalSExpr {
    pub fn validate(&self) -> Result<()> {
        let finite = |name: &'static str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::range(name, v, "the reals"))
            }
        };
        match *self {
            RationalSExpr::Lemma2 { zeta, mu, a } => {
                finite("a", a)?;
                if !(zeta > 0.0 && zeta.is_finite()) {
                    return Err(Error::range("zeta", zeta, "(0, inf)"));
                }
                if !(mu > 0.0 && mu.is_finite()) {
                    return Err(Error::range("mu", mu, "(0, inf)"));
                }
            }
            RationalSExpr::Lemma3 { zeta, mu, a, .. } => {
                finite("a", a)?;
                finite("zeta", zeta)?;
                if !(mu > 0.0 && zeta >= mu) {
                    return Err(Error::InvalidParameter(format!(
                        "need zeta >= mu > 0, got zeta = {zeta}, mu = {mu}"
                    )));
                }
                if zeta == mu && !(a.abs() < 1.0) {
                    return Err(Error::range("a", a, "(-1, 1) when zeta = mu"));
                }
            }
            RationalSExpr::Lemma4 { zeta, mu, xi, a, b } => {
                finite("a", a)?;
                finite("b", b)?;
                finite("zeta", zeta)?;
                finite("xi", xi)?;
                if !(mu >= 0.0 && zeta >= mu && zeta > xi && zeta > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "need zeta >= mu >= 0 and zeta > xi, got zeta = {zeta}, mu = {mu}, xi = {xi}"
                    )));
                }
                if zeta == mu && !(a.abs() <= EQUAL_ORDER_RATIO_LIMIT) {
                    return Err(Error::range("a", a, "[-0.9, 0.9] when zeta = mu"));
                }
            }
        }
        Ok(())
    }

    /// The expression at `s > 0`.
    pub fn eval(&self, s: f64) -> f64 {
        match *self {
            RationalSExpr::Lemma2 { zeta, mu, a } => s.powf(zeta - mu) / (s.powf(zeta) + a),
            RationalSExpr::Lemma3 { zeta, mu, a, n } => (s.powf(zeta) + a * s.powf(mu)).powi(-(n as i32 + 1)),
            RationalSExpr::Lemma4 { zeta, mu, xi, a, b } => s.powf(xi) / (s.powf(zeta) + a * s.powf(mu) + b),
        }
    }

    /// Whether the series expansion behind the inverse is valid at `s`.
    pub fn in_validity_region(&self, s: f64) -> bool {
        if !(s > 0.0) {
            return false;
        }
        match *self {
            RationalSExpr::Lemma2 { zeta, a, .. } => s.powf(zeta) > a.abs(),
            RationalSExpr::Lemma3 { zeta, mu, a, .. } => s.powf(zeta - mu) > a.abs(),
            RationalSExpr::Lemma4 { zeta, mu, a, b, .. } => {
                let base = s.powf(zeta) + a * s.powf(mu);
                s.powf(zeta - mu) > a.abs() && base.abs() > b.abs()
            }
        }
    }

    /// Exponent `p` with `inverse(u) ~ u^p` as `u -> 0`.
    pub fn leading_exponent(&self) -> f64 {
        match *self {
            RationalSExpr::Lemma2 { mu, .. } => mu - 1.0,
            RationalSExpr::Lemma3 { zeta, n, .. } => zeta * (n as f64 + 1.0) - 1.0,
            RationalSExpr::Lemma4 { zeta, xi, .. } => zeta - xi - 1.0,
        }
    }

    /// Closed-form inverse transform at staircase value `u > 0`.
    pub fn invert_u(&self, u: f64) -> Result<f64> {
        self.validate()?;
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::range("u", u, "(0, inf)"));
        }
        match *self {
            RationalSExpr::Lemma2 { zeta, mu, a } => {
                let e = mittag_leffler(&MLParams::new(zeta, mu)?, -a * u.powf(zeta))?;
                Ok(u.powf(mu - 1.0) * e)
            }
            RationalSExpr::Lemma3 { zeta, mu, a, n } => {
                let head = u.powf(zeta * (n as f64 + 1.0) - 1.0);
                Ok(head * binomial_series(zeta, mu, a, n, zeta * (n as f64 + 1.0), u)?)
            }
            RationalSExpr::Lemma4 { zeta, mu, xi, a, b } => lemma4_series(zeta, mu, xi, a, b, u),
        }
    }

    /// The inverse as a profile; evaluation failures become NaN.
    pub fn as_profile(&self) -> Result<Profile> {
        self.validate()?;
        let expr = *self;
        let p = Profile::new(expr.to_string(), move |u| expr.invert_u(u).unwrap_or(f64::NAN));
        Ok(if self.leading_exponent() < 0.0 {
            p.with_singularity(0.0)
        } else {
            p
        })
    }
}

impl fmt::Display for RationalSExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RationalSExpr::Lemma2 { zeta, mu, a } => write!(f, "s^({zeta}-{mu})/(s^{zeta}+{a})"),
            RationalSExpr::Lemma3 { zeta, mu, a, n } => write!(f, "1/(s^{zeta}+{a}s^{mu})^{}", n + 1),
            RationalSExpr::Lemma4 { zeta, mu, xi, a, b } => write!(f, "s^{xi}/(s^{zeta}+{a}s^{mu}+{b})"),
        }
    }
}

fn ln_binomial(n: u32, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    libm::lgamma(n + k + 1.0) - libm::lgamma(n + 1.0) - libm::lgamma(k + 1.0)
}

/// `±exp(ln_binom + ln_mag) / Γ(gamma_arg)` for `gamma_arg > 0`.
fn series_term(ln_binom: f64, ln_mag: f64, negative: bool, gamma_arg: f64) -> f64 {
    let mag = (ln_binom + ln_mag - libm::lgamma(gamma_arg)).exp();
    if negative {
        -mag
    } else {
        mag
    }
}

/// `Σ_k C(n+k,k) (-a)^k u^(k(ζ-μ)) / Γ(k(ζ-μ) + g0)`.
fn binomial_series(zeta: f64, mu: f64, a: f64, n: u32, g0: f64, u: f64) -> Result<f64> {
    let d = zeta - mu;
    let ln_u = u.ln();
    let mut sum = 0.0;
    let mut previous = f64::INFINITY;
    for k in 0..=(10 * SERIES_CAP) {
        let term = if a == 0.0 && k > 0 {
            0.0
        } else {
            let ln_mag = if k == 0 {
                0.0
            } else {
                k as f64 * (a.abs().ln() + d * ln_u)
            };
            series_term(ln_binomial(n, k), ln_mag, a > 0.0 && k % 2 == 1, k as f64 * d + g0)
        };
        sum += term;
        let magnitude = term.abs();
        if magnitude <= previous && magnitude <= SERIES_TOLERANCE * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
        if term == 0.0 && k > 0 {
            return Ok(sum);
        }
        previous = magnitude;
    }
    Err(Error::Convergence {
        method: "binomial inverse series",
        estimate: sum,
        error: previous,
    })
}

fn lemma4_series(zeta: f64, mu: f64, xi: f64, a: f64, b: f64, u: f64) -> Result<f64> {
    let ln_u = u.ln();
    let mut total = 0.0;
    let mut previous = f64::INFINITY;
    for n in 0..SERIES_CAP as u32 {
        // the n-th block is (-b)^n u^(nζ) times a Lemma-3 style sum
        let g0 = (n as f64 + 1.0) * zeta - xi;
        let inner = if b == 0.0 && n > 0 {
            0.0
        } else {
            let block = binomial_series(zeta, mu, a, n, g0, u)?;
            let scale = if n == 0 {
                1.0
            } else {
                (n as f64 * (b.abs().ln() + zeta * ln_u)).exp()
            };
            let sign = if b > 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
            sign * scale * block
        };
        total += inner;
        let magnitude = inner.abs();
        if n > 0 && magnitude <= previous && magnitude <= SERIES_TOLERANCE * total.abs().max(f64::MIN_POSITIVE) {
            return Ok(u.powf(zeta - xi - 1.0) * total);
        }
        if inner == 0.0 && n > 0 {
            return Ok(u.powf(zeta - xi - 1.0) * total);
        }
        previous = magnitude;
    }
    Err(Error::Convergence {
        method: "double inverse series",
        estimate: u.powf(zeta - xi - 1.0) * total,
        error: previous,
    })
}

/// Closed-form inverse at `x`, evaluated at `u = S(x)`.
pub fn invert(expr: &RationalSExpr, spec: &CantorSpec, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= spec.length()) {
        return Err(Error::range("x", x, format!("(0, {}]", spec.length())));
    }
    expr.invert_u(spec.eval(x)?)
}

/// `∫_0^∞ g(u) e^(-s u) du`.
///
/// The range is cut at the first `U` in the sequence `1/s, 2/s, 4/s, ...`
/// with `e^(-sU) max|g| / s < tol`, the maximum being sampled over
/// `[U/2, U]`. Integrands that never pass the test are reported as
/// [`Error::Divergent`].
pub fn forward_transform(p: &Profile, s: f64, tol: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::range("s", s, "(0, inf)"));
    }
    if !(tol > 0.0) {
        return Err(Error::range("tol", tol, "(0, inf)"));
    }
    let opts = QuadOptions {
        abs_tol: 0.1 * tol,
        rel_tol: 1e-13,
        ..QuadOptions::default()
    };
    let accept = tol.max(1e-9);
    let mut lo = 0.0;
    let mut hi = 1.0 / s;
    let mut total = 0.0;
    for _ in 0..40 {
        let mut peak = 0.0f64;
        for j in 0..=8 {
            let u = hi * (0.5 + j as f64 / 16.0);
            let g = p.eval(u);
            if g.is_nan() {
                return Err(Error::Singular { at: u });
            }
            peak = peak.max(g.abs());
        }
        if peak.is_infinite() {
            break;
        }
        total += quad::integrate_accepting(|u| p.eval(u) * (-s * u).exp(), lo, hi, &opts, accept)?;
        // tail estimate in log form, e^(-s U) underflows long before g overflows
        if peak == 0.0 || peak.ln() - s * hi - s.ln() < tol.ln() {
            return Ok(total);
        }
        lo = hi;
        hi *= 2.0;
    }
    Err(Error::Divergent(format!(
        "{} e^(-{s} u) does not decay by u = {lo}",
        p.description()
    )))
}

/// Derivative rule `L[g^(n)] = s^n F - Σ_{k<n} s^(n-1-k) g^(k)(0)`.
pub fn derivative_rule(f_of_s: f64, s: f64, n: u32, init: &[f64]) -> Result<f64> {
    if init.len() != n as usize {
        return Err(Error::Shape(format!(
            "order {n} needs {n} initial values, got {}",
            init.len()
        )));
    }
    let n_f = n as f64;
    let mut v = s.powf(n_f) * f_of_s;
    for (k, c) in init.iter().enumerate() {
        v -= s.powf(n_f - 1.0 - k as f64) * c;
    }
    Ok(v)
}

/// Transform of the Caputo derivative of order `β`:
/// `s^β F - Σ_{k<n} s^(β-k-1) g^(k)(0)`, `n = ⌈β⌉`.
///
/// Orders `β = kα` act as the `k`-th local derivative and use
/// [`derivative_rule`].
pub fn caputo_transform(f_of_s: f64, s: f64, ord: &OrderPair, init: &[f64]) -> Result<f64> {
    if let Some(k) = ord.local_multiple() {
        return derivative_rule(f_of_s, s, k, init);
    }
    let b = ord.beta();
    let n = b.ceil() as usize;
    if init.len() != n {
        return Err(Error::Shape(format!(
            "order {b} needs {n} initial values, got {}",
            init.len()
        )));
    }
    let mut v = s.powf(b) * f_of_s;
    for (k, c) in init.iter().enumerate() {
        v -= s.powf(b - k as f64 - 1.0) * c;
    }
    Ok(v)
}

/// Dimension-graded variant `s^β F - Σ_{k<m} s^(β-(k+1)α) D^(kα) f(0)` with
/// `m` the smallest integer such that `mα ≥ β`.
///
/// Applied to `CD^β y + y = 0`, `y(0) = 1` it yields
/// `Y(s) = s^(β-α) / (1 + s^β)`. At `α = 1` it coincides with
/// [`caputo_transform`].
pub fn caputo_transform_fractal(f_of_s: f64, s: f64, ord: &OrderPair, init: &[f64]) -> Result<f64> {
    let m = ord.n() as usize;
    if init.len() != m {
        return Err(Error::Shape(format!(
            "order {} needs {m} initial values, got {}",
            ord.beta(),
            init.len()
        )));
    }
    let (b, a) = (ord.beta(), ord.alpha());
    let mut v = s.powf(b) * f_of_s;
    for (k, c) in init.iter().enumerate() {
        v -= s.powf(b - (k as f64 + 1.0) * a) * c;
    }
    Ok(v)
}

/// Largest relative gap between the numerical transform of the inverse and
/// the expression itself over `s_grid`.
pub fn roundtrip_check(expr: &RationalSExpr, s_grid: &[f64]) -> Result<f64> {
    let p = expr.as_profile()?;
    let mut worst = 0.0f64;
    for &s in s_grid {
        if !expr.in_validity_region(s) {
            return Err(Error::InvalidParameter(format!(
                "s = {s} is outside the validity region of {expr}"
            )));
        }
        let numeric = forward_transform(&p, s, DEFAULT_TOLERANCE)?;
        let exact = expr.eval(s);
        worst = worst.max(((numeric - exact) / exact).abs());
    }
    Ok(worst)
}

/// Staircase convolution `(f * g)(u) = ∫_0^u f(u - t) g(t) dt`.
pub fn convolution(f: &Profile, g: &Profile) -> Profile {
    let (f, g) = (f.clone(), g.clone());
    let name = format!("({}) * ({})", f.description(), g.description());
    Profile::new(name, move |u| {
        let opts = QuadOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            ..QuadOptions::default()
        };
        quad::integrate_accepting(|t| f.eval(u - t) * g.eval(t), 0.0, u, &opts, 1e-10).unwrap_or(f64::NAN)
    })
}

/// Table entries checked by the fixture file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureShape {
    Lemma2,
    Lemma3,
    Lemma4,
    /// `L[u^n]`, exponent in `n`.
    Power,
    /// `L[∫_0^u g]` for `g = e^(-a u)`.
    Integral,
    /// `(-1)^n d^n/ds^n L[g]` for `g = e^(-a u)`.
    FreqDiff,
    /// `L[u^ζ * u^μ]`.
    Convolution,
    /// Derivative rule of order `n` for `g = e^(-a u)`.
    Derivative,
    /// `L[I^ξ 1]` with the order in `ξ`.
    RlIntegral,
}

impl FixtureShape {
    pub const ALL: [FixtureShape; 9] = [
        FixtureShape::Lemma2,
        FixtureShape::Lemma3,
        FixtureShape::Lemma4,
        FixtureShape::Power,
        FixtureShape::Integral,
        FixtureShape::FreqDiff,
        FixtureShape::Convolution,
        FixtureShape::Derivative,
        FixtureShape::RlIntegral,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FixtureShape::Lemma2 => "lemma2",
            FixtureShape::Lemma3 => "lemma3",
            FixtureShape::Lemma4 => "lemma4",
            FixtureShape::Power => "power",
            FixtureShape::Integral => "integral",
            FixtureShape::FreqDiff => "freq_diff",
            FixtureShape::Convolution => "convolution",
            FixtureShape::Derivative => "derivative",
            FixtureShape::RlIntegral => "rl_integral",
        }
    }
}

impl FromStr for FixtureShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureShape::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown fixture shape '{s}'")))
    }
}

/// One transform test vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixture {
    pub shape: FixtureShape,
    pub zeta: f64,
    pub mu: f64,
    pub xi: f64,
    pub a: f64,
    pub b: f64,
    pub n: u32,
    pub s: f64,
    pub expected: f64,
}

pub const FIXTURE_HEADER: &str = "shape,zeta,mu,xi,a,b,n,s,expected";

impl Fixture {
    pub fn rational(&self) -> Option<RationalSExpr> {
        let Fixture {
            zeta, mu, xi, a, b, n, ..
        } = *self;
        match self.shape {
            FixtureShape::Lemma2 => Some(RationalSExpr::Lemma2 { zeta, mu, a }),
            FixtureShape::Lemma3 => Some(RationalSExpr::Lemma3 { zeta, mu, a, n }),
            FixtureShape::Lemma4 => Some(RationalSExpr::Lemma4 { zeta, mu, xi, a, b }),
            _ => None,
        }
    }

    /// The transform computed numerically through the library.
    pub fn compute(&self) -> Result<f64> {
        let s = self.s;
        let tol = DEFAULT_TOLERANCE;
        let decay = Profile::exp(-self.a);
        match self.shape {
            FixtureShape::Lemma2 | FixtureShape::Lemma3 | FixtureShape::Lemma4 => {
                let expr = self.rational().expect("rational shape");
                forward_transform(&expr.as_profile()?, s, tol)
            }
            FixtureShape::Power => forward_transform(&Profile::power(self.n as f64), s, tol),
            FixtureShape::Integral => forward_transform(&crate::local::antiderivative(&decay), s, tol),
            FixtureShape::FreqDiff => {
                let n = self.n;
                let d = diff::derivative(|t| forward_transform(&decay, t, tol), s, n, diff::default_step(n), 0.0)?;
                Ok(if n % 2 == 1 { -d } else { d })
            }
            FixtureShape::Convolution => {
                let c = convolution(&Profile::power(self.zeta), &Profile::power(self.mu));
                forward_transform(&c, s, tol)
            }
            FixtureShape::Derivative => {
                let f = forward_transform(&decay, s, tol)?;
                let init: Vec<f64> = (0..self.n).map(|k| (-self.a).powi(k as i32)).collect();
                derivative_rule(f, s, self.n, &init)
            }
            FixtureShape::RlIntegral => {
                let ord = OrderPair::new(TRIADIC_DIMENSION, self.xi)?;
                let one = Profile::constant(1.0);
                let integrated = Profile::new("I^b 1", move |u| rl_integral_u(&one, &ord, u).unwrap_or(f64::NAN));
                forward_transform(&integrated, s, tol)
            }
        }
    }

    /// The closed form of the table entry.
    pub fn closed_form(&self) -> Result<f64> {
        let s = self.s;
        Ok(match self.shape {
            FixtureShape::Lemma2 | FixtureShape::Lemma3 | FixtureShape::Lemma4 => {
                self.rational().expect("rational shape").eval(s)
            }
            FixtureShape::Power => gamma_f(self.n as f64 + 1.0)? * s.powf(-(self.n as f64) - 1.0),
            FixtureShape::Integral => 1.0 / (s * (s + self.a)),
            FixtureShape::FreqDiff => gamma_f(self.n as f64 + 1.0)? * (s + self.a).powi(-(self.n as i32) - 1),
            FixtureShape::Convolution => {
                gamma_f(self.zeta + 1.0)? * gamma_f(self.mu + 1.0)? * s.powf(-self.zeta - self.mu - 2.0)
            }
            FixtureShape::Derivative => (-self.a).powi(self.n as i32) / (s + self.a),
            FixtureShape::RlIntegral => s.powf(-self.xi - 1.0),
        })
    }

    fn csv_fields(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.shape.name(),
            format_float(self.zeta),
            format_float(self.mu),
            format_float(self.xi),
            format_float(self.a),
            format_float(self.b),
            self.n,
            format_float(self.s)
        )
    }
}

/// Reads fixtures; `#` lines and blank lines are skipped, the header is
/// checked.
pub fn read_fixtures<R: BufRead>(r: R) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    let mut header_seen = false;
    for (i, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::Shape(format!("line {}: {e}", i + 1)))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if !line.starts_with(FIXTURE_HEADER) {
                return Err(Error::Shape(format!(
                    "expected header '{FIXTURE_HEADER}', got '{line}'"
                )));
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() < 9 {
            return Err(Error::Shape(format!(
                "line {}: expected 9 fields, got {}",
                i + 1,
                fields.len()
            )));
        }
        let num = |j: usize| -> Result<f64> {
            fields[j]
                .parse::<f64>()
                .map_err(|e| Error::Shape(format!("line {}, field {}: {e}", i + 1, j + 1)))
        };
        out.push(Fixture {
            shape: fields[0].parse()?,
            zeta: num(1)?,
            mu: num(2)?,
            xi: num(3)?,
            a: num(4)?,
            b: num(5)?,
            n: fields[6]
                .parse()
                .map_err(|e| Error::Shape(format!("line {}, field 7: {e}", i + 1)))?,
            s: num(7)?,
            expected: num(8)?,
        });
    }
    Ok(out)
}

/// Writes fixtures with an extra `computed` column.
pub fn write_fixture_report<W: Write>(mut w: W, fixtures: &[Fixture]) -> Result<()> {
    let io = |e: std::io::Error| Error::Shape(e.to_string());
    writeln!(w, "{FIXTURE_HEADER},computed").map_err(io)?;
    for f in fixtures {
        let computed = f.compute()?;
        writeln!(
            w,
            "{},{},{}",
            f.csv_fields(),
            format_float(f.expected),
            format_float(computed)
        )
        .map_err(io)?;
    }
    Ok(())
}

/// Built-in fixture set with closed-form expected values.
pub fn default_fixtures() -> Result<Vec<Fixture>> {
    let base = Fixture {
        shape: FixtureShape::Power,
        zeta: 0.0,
        mu: 0.0,
        xi: 0.0,
        a: 0.0,
        b: 0.0,
        n: 0,
        s: 1.0,
        expected: 0.0,
    };
    let a = TRIADIC_DIMENSION;
    let mut out = Vec::new();
    let mut push = |f: Fixture| -> Result<()> {
        let expected = f.closed_form()?;
        out.push(Fixture { expected, ..f });
        Ok(())
    };
    for s in [2.0, 3.0, 5.0] {
        push(Fixture {
            shape: FixtureShape::Lemma2,
            zeta: 1.0,
            mu: 1.0,
            a: 1.0,
            s,
            ..base
        })?;
    }
    for s in [2.0, 4.0] {
        push(Fixture {
            shape: FixtureShape::Lemma2,
            zeta: 0.5,
            mu: a,
            a: 1.0,
            s,
            ..base
        })?;
    }
    for s in [3.0, 6.0] {
        push(Fixture {
            shape: FixtureShape::Lemma3,
            zeta: 1.0,
            mu: 0.5,
            a: 0.2,
            n: 1,
            s,
            ..base
        })?;
    }
    for s in [2.0, 4.0] {
        push(Fixture {
            shape: FixtureShape::Lemma4,
            zeta: 1.0,
            mu: 0.5,
            xi: 0.25,
            a: 0.3,
            b: 0.5,
            s,
            ..base
        })?;
    }
    for (n, s) in [(0, 2.0), (2, 1.0), (3, 2.5)] {
        push(Fixture {
            shape: FixtureShape::Power,
            n,
            s,
            ..base
        })?;
    }
    for s in [1.0, 2.0] {
        push(Fixture {
            shape: FixtureShape::Integral,
            a: 1.0,
            s,
            ..base
        })?;
    }
    for (n, s) in [(1, 1.5), (2, 2.0)] {
        push(Fixture {
            shape: FixtureShape::FreqDiff,
            a: 1.0,
            n,
            s,
            ..base
        })?;
    }
    for (zeta, mu, s) in [(0.0, 1.0, 2.0), (0.5, 1.5, 3.0)] {
        push(Fixture {
            shape: FixtureShape::Convolution,
            zeta,
            mu,
            s,
            ..base
        })?;
    }
    for (n, s) in [(1, 2.0), (2, 3.0)] {
        push(Fixture {
            shape: FixtureShape::Derivative,
            a: 1.0,
            n,
            s,
            ..base
        })?;
    }
    for (xi, s) in [(0.25, 2.0), (0.5, 4.0)] {
        push(Fixture {
            shape: FixtureShape::RlIntegral,
            xi,
            s,
            ..base
        })?;
    }
    Ok(out)
}
