//! The linear relaxation equations `D y + r y = 0` in local and non-local form.
//!
//! * local: `D_F^α y + r y = 0`, `y(0) = y0`, solved by `y = y0 e^(-r S(x))`;
//! * non-local: `CD^β y + r y = 0`, `y(0) = y0`, whose transform solution is
//!   `y = y0 S(x)^(α-1) E_{β,α}(-r S(x)^β)`.
//!
//! The non-local solution is singular at `x = 0` when `α < 1`, so it does not
//! attain the prescribed `y(0)`. Grid rows at `u = 0` carry no value and set
//! the `singular` flag column.
//!
//! [`gl_stepper`] checks the closed form with an independent Grünwald march.

use crate::nonlocal::{grunwald_weights, OrderPair};
use crate::special::{mittag_leffler, MLParams};
use crate::{format_float, CantorSpec, Error, GridSeries, Profile, Result};

/// Smallest accepted grid size.
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeKind {
    Local,
    NonlocalCaputo,
}

impl FdeKind {
    pub fn name(&self) -> &'static str {
        match self {
            FdeKind::Local => "local",
            FdeKind::NonlocalCaputo => "nonlocal",
        }
    }
}

/// `D y + rate y = 0` with `y(0) = init` on `grid_n` points.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFdeProblem {
    pub kind: FdeKind,
    pub spec: CantorSpec,
    pub rate: f64,
    /// Non-local order; ignored for [`FdeKind::Local`].
    pub beta: f64,
    pub init: f64,
    pub grid_n: usize,
}

impl LinearFdeProblem {
    /// Unit rate and initial value on the triadic set, 512 points.
    pub fn local() -> Self {
        LinearFdeProblem {
            kind: FdeKind::Local,
            spec: CantorSpec::triadic(),
            rate: 1.0,
            beta: 0.0,
            init: 1.0,
            grid_n: 512,
        }
    }

    pub fn nonlocal(beta: f64) -> Self {
        LinearFdeProblem {
            kind: FdeKind::NonlocalCaputo,
            beta,
            ..Self::local()
        }
    }

    pub fn with_spec(mut self, spec: CantorSpec) -> Self {
        self.spec = spec;
        self
    }

    pub fn with_rate(mut self, rate: f64) -> Self {
        self.rate = rate;
        self
    }

    pub fn with_init(mut self, init: f64) -> Self {
        self.init = init;
        self
    }

    pub fn with_grid(mut self, grid_n: usize) -> Self {
        self.grid_n = grid_n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_n < MIN_GRID {
            return Err(Error::InvalidParameter(format!(
                "grid_n must be at least {MIN_GRID}, got {}",
                self.grid_n
            )));
        }
        if !self.rate.is_finite() {
            return Err(Error::range("rate", self.rate, "finite"));
        }
        if !self.init.is_finite() {
            return Err(Error::range("init", self.init, "finite"));
        }
        if self.kind == FdeKind::NonlocalCaputo && !(self.beta > 0.0) {
            return Err(Error::range("beta", self.beta, "(0, 2)"));
        }
        Ok(())
    }

    /// The order pair of the non-local problem.
    pub fn order(&self) -> Result<OrderPair> {
        OrderPair::for_spec(&self.spec, self.beta)
    }

    fn expect(&self, kind: FdeKind) -> Result<()> {
        self.validate()?;
        if self.kind != kind {
            return Err(Error::InvalidParameter(format!(
                "expected a {} problem, got {}",
                kind.name(),
                self.kind.name()
            )));
        }
        Ok(())
    }

    fn base_series(&self) -> Result<GridSeries> {
        let mut g = GridSeries::uniform(&self.spec, self.grid_n)?;
        g.set_meta("kind", self.kind.name());
        g.set_meta("rate", format_float(self.rate));
        g.set_meta("init", format_float(self.init));
        g.set_meta("n", self.grid_n.to_string());
        if self.kind == FdeKind::NonlocalCaputo {
            g.set_meta("beta", format_float(self.beta));
        }
        Ok(g)
    }
}

/// Series cut for the closed form, well below the default `1e-12`.
const SOLUTION_SERIES_TOLERANCE: f64 = 1e-15;

fn solution_params(beta: f64, alpha: f64) -> Result<MLParams> {
    MLParams::new(beta, alpha)?.with_tol(SOLUTION_SERIES_TOLERANCE)
}

/// `y0 e^(-r u)` as a profile.
pub fn local_profile(prob: &LinearFdeProblem) -> Profile {
    Profile::exp(-prob.rate).scale(prob.init)
}

/// `y0 u^(α-1) E_{β,α}(-r u^β)` as a profile.
pub fn nonlocal_profile(prob: &LinearFdeProblem) -> Result<Profile> {
    let alpha = prob.spec.alpha();
    let params = solution_params(prob.beta, alpha)?;
    let (rate, beta, init) = (prob.rate, prob.beta, prob.init);
    let p = Profile::new(
        format!("{init} u^({alpha}-1) E_({beta},{alpha})(-{rate} u^{beta})"),
        move |u| {
            let e = mittag_leffler(&params, -rate * u.powf(beta)).unwrap_or(f64::NAN);
            init * u.powf(alpha - 1.0) * e
        },
    );
    Ok(if alpha < 1.0 { p.with_singularity(0.0) } else { p })
}

/// Samples the local solution on a uniform grid (column `value`).
pub fn solve_local(prob: &LinearFdeProblem) -> Result<GridSeries> {
    prob.expect(FdeKind::Local)?;
    let mut g = prob.base_series()?;
    let values = g
        .s()
        .iter()
        .map(|&u| Some(prob.init * (-prob.rate * u).exp()))
        .collect();
    g.push_column("value", values)?;
    Ok(g)
}

/// Samples the non-local closed form on a uniform grid.
///
/// Columns: `value` (empty where singular) and `singular` (1 at `u = 0` when
/// `α < 1`, else 0). When `β = α` a `reduced` column carries the local
/// solution `y0 e^(-r u)` that the order reduces to.
pub fn solve_nonlocal(prob: &LinearFdeProblem) -> Result<GridSeries> {
    prob.expect(FdeKind::NonlocalCaputo)?;
    let ord = prob.order()?;
    let alpha = prob.spec.alpha();
    let params = solution_params(prob.beta, alpha)?;
    let mut g = prob.base_series()?;
    let mut values = Vec::with_capacity(g.len());
    let mut flags = Vec::with_capacity(g.len());
    for &u in g.s() {
        if u == 0.0 && alpha < 1.0 {
            values.push(None);
            flags.push(Some(1.0));
            continue;
        }
        let e = mittag_leffler(&params, -prob.rate * u.powf(prob.beta))?;
        values.push(Some(prob.init * u.powf(alpha - 1.0) * e));
        flags.push(Some(0.0));
    }
    let reduced = (ord.local_multiple() == Some(1)).then(|| {
        g.s()
            .iter()
            .map(|&u| Some(prob.init * (-prob.rate * u).exp()))
            .collect::<Vec<_>>()
    });
    g.push_column("value", values)?;
    g.push_column("singular", flags)?;
    if let Some(r) = reduced {
        g.push_column("reduced", r)?;
    }
    Ok(g)
}

/// Grünwald march for the non-local problem on the uniform staircase grid
/// `u_j = j U / N`, `U = S(L)`, `N = grid_n`.
///
/// Two stages:
///
/// 1. the Caputo equation `D^β e + r e = 0`, `e(0) = y0` is marched with
///    initial-value correction,
///    `e_j (h^-β + r) = h^-β y0 - h^-β Σ_{k=1..j} w_k (e_{j-k} - y0)`;
/// 2. `y = D^(1-α) e` by a second Grünwald sum.
///
/// The transform of the result is `y0 s^(β-α) / (s^β + r)`, the same as the
/// closed form. Columns: `value` (`y`, empty at `u = 0` when `α < 1`) and
/// `caputo` (`e`). The `x` axis holds `S^-1(u_j)`.
pub fn gl_stepper(prob: &LinearFdeProblem) -> Result<GridSeries> {
    prob.expect(FdeKind::NonlocalCaputo)?;
    let b = prob.beta;
    let alpha = prob.spec.alpha();
    if b >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "the Grünwald march handles 0 < beta < 1, got {b}"
        )));
    }
    let n = prob.grid_n;
    let h = prob.spec.s_max() / n as f64;
    let y0 = prob.init;

    let w = grunwald_weights(b, n);
    let hb = h.powf(-b);
    let diagonal = hb * w[0] + prob.rate;
    if diagonal == 0.0 || !diagonal.is_finite() {
        return Err(Error::Solver(format!("singular step diagonal {diagonal}")));
    }
    let mut e = Vec::with_capacity(n + 1);
    e.push(y0);
    for j in 1..=n {
        let history: f64 = (1..=j).map(|k| w[k] * (e[j - k] - y0)).sum();
        let next = (hb * w[0] * y0 - hb * history) / diagonal;
        if !next.is_finite() {
            return Err(Error::Solver(format!("non-finite state at step {j}")));
        }
        e.push(next);
    }

    let c = 1.0 - alpha;
    let y: Vec<Option<f64>> = if c == 0.0 {
        e.iter().map(|&v| Some(v)).collect()
    } else {
        let v = grunwald_weights(c, n);
        let hc = h.powf(-c);
        (0..=n)
            .map(|j| (j > 0).then(|| hc * (0..=j).map(|k| v[k] * e[j - k]).sum::<f64>()))
            .collect()
    };

    let xs = (0..=n)
        .map(|j| prob.spec.inverse(j as f64 * h))
        .collect::<Result<Vec<_>>>()?;
    let mut g = GridSeries::on_grid(&prob.spec, xs)?;
    g.set_meta("kind", "gl");
    g.set_meta("rate", format_float(prob.rate));
    g.set_meta("init", format_float(prob.init));
    g.set_meta("beta", format_float(b));
    g.set_meta("n", n.to_string());
    g.set_meta("h", format_float(h));
    g.push_column("value", y)?;
    g.push_column("caputo", e.into_iter().map(Some).collect())?;
    Ok(g)
}

/// Pairs two solutions on the same grid: columns `y_local` and `y_nonlocal`
/// from each input's `value` column, with `max_gap` and `mean_gap` over rows
/// where both are present.
pub fn compare_runs(local: &GridSeries, nonlocal: &GridSeries) -> Result<GridSeries> {
    if local.is_empty() || nonlocal.is_empty() {
        return Err(Error::Shape("cannot compare empty grids".into()));
    }
    if local.x() != nonlocal.x() {
        return Err(Error::Shape(format!(
            "grids differ ({} vs {} points or different abscissae)",
            local.len(),
            nonlocal.len()
        )));
    }
    let a = local.values("value")?;
    let b = nonlocal.values("value")?;
    let gaps: Vec<f64> = a
        .iter()
        .zip(b)
        .filter_map(|(p, q)| Some((p.as_ref()? - q.as_ref()?).abs()))
        .collect();
    let mut out = local.axes();
    out.push_column("y_local", a.to_vec())?;
    out.push_column("y_nonlocal", b.to_vec())?;
    let max_gap = gaps.iter().copied().fold(0.0, f64::max);
    let mean_gap = if gaps.is_empty() {
        0.0
    } else {
        gaps.iter().sum::<f64>() / gaps.len() as f64
    };
    out.set_meta("kind", "compare");
    out.set_meta("max_gap", format_float(max_gap));
    out.set_meta("mean_gap", format_float(mean_gap));
    Ok(out)
}
