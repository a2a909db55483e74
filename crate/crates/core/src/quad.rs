//! Globally adaptive Gauss-Kronrod quadrature.
//!
//! A 21-point Kronrod rule with its embedded 10-point Gauss rule gives the
//! value and error estimate on each panel. The panel with the largest error
//! estimate is bisected until the total estimate meets the tolerance, every
//! remaining panel has reached `max_depth` bisections, or `max_intervals`
//! panels exist. Nodes are interior, so integrable endpoint singularities are
//! handled by refinement alone.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], ..., XGK[9]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Tolerances and limits for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections applied to any panel.
    pub max_depth: u32,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_depth: 100,
            max_intervals: 2000,
        }
    }
}

impl QuadOptions {
    pub fn tight() -> Self {
        QuadOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Singular { at: x })
        }
    };
    let fc = eval(center)?;
    let mut resk = WGK[10] * fc;
    let mut resg = 0.0;
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut error = ((resk - resg) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Panel {
        a,
        b,
        value,
        error,
        depth,
    })
}

/// Integrates `f` over `[a, b]`.
///
/// Returns [`Error::Convergence`] carrying the best estimate when the
/// tolerance `max(abs_tol, rel_tol |I|)` is not met, and [`Error::Singular`]
/// if `f` returns a non-finite value at a node.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error: 0.0,
            intervals: 0,
        });
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "integration bounds [{a}, {b}] must be finite"
        )));
    }
    let first = kronrod(&f, a, b, 0)?;
    let mut active = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut value = first.value;
    let mut error = first.error;
    active.push(first);
    let mut intervals = 1;

    loop {
        let tol = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= tol {
            break;
        }
        let Some(worst) = active.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        let too_narrow =
            mid <= worst.a || mid >= worst.b || (worst.b - worst.a).abs() <= 4.0 * f64::EPSILON * mid.abs();
        if worst.depth >= opts.max_depth || too_narrow || intervals >= opts.max_intervals {
            frozen.push(worst);
            if intervals >= opts.max_intervals {
                frozen.extend(active.drain());
            }
            continue;
        }
        let left = kronrod(&f, worst.a, mid, worst.depth + 1)?;
        let right = kronrod(&f, mid, worst.b, worst.depth + 1)?;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        intervals += 1;
    }

    // recompute the totals from the panels to shed drift in the running sums
    let panels = active.iter().chain(frozen.iter());
    let (value, error) = panels.fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
    let tol = opts.abs_tol.max(opts.rel_tol * value.abs());
    if error <= tol {
        Ok(QuadResult {
            value,
            error,
            intervals,
        })
    } else {
        Err(Error::Convergence {
            method: "adaptive Gauss-Kronrod quadrature",
            estimate: value,
            error,
        })
    }
}

/// Integrates with `opts`, accepting a non-converged estimate whose error is
/// at most `accept`.
pub(crate) fn integrate_accepting<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
    accept: f64,
) -> Result<f64> {
    match integrate(f, a, b, opts) {
        Ok(r) => Ok(r.value),
        Err(Error::Convergence { estimate, error, .. }) if error <= accept.max(accept * estimate.abs()) => Ok(estimate),
        Err(e) => Err(e),
    }
}
