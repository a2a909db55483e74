//! The `fcalc` command line front end.
//!
//! Every subcommand writes one table, as CSV (default) or JSON, to standard
//! output or `--out`. Exit codes: 0 on success, 1 for usage errors and
//! invalid parameters, 2 for numerical or I/O failures.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::laplace::{self, Fixture, FIXTURE_HEADER};
use crate::nonlocal::OrderPair;
use crate::ode::{self, LinearFdeProblem};
use crate::physics::{self, BlairParams, TautochroneParams};
use crate::{format_float, local, nonlocal, selfcheck, CantorSpec, Error, GridSeries, Profile, TRIADIC_DIMENSION};

const FIGURE_COMMANDS: &str = "\
Figure data:
  staircase curve                    fcalc staircase --n 512
  local relaxation exp(-S(x))        fcalc ode --kind local --n 512
  non-local relaxation, beta 0.33    fcalc ode --kind nonlocal --beta 0.33 --n 512
  non-local relaxation, beta 0.25    fcalc ode --kind nonlocal --beta 0.25 --n 512
  step strain and Blair stress       fcalc blair --beta 0.5 --n 512   (columns strain, in_set, beta_0.5)";

#[derive(Debug, Parser)]
#[command(
    name = "fcalc",
    version,
    about = "Local and non-local calculus on the triadic Cantor set",
    after_help = FIGURE_COMMANDS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Dimension of the fractal support.
    #[arg(long, global = true, default_value_t = TRIADIC_DIMENSION)]
    alpha: f64,

    /// Non-local order; `blair` accepts a comma-separated list.
    #[arg(long, global = true)]
    beta: Option<String>,

    /// Number of grid points.
    #[arg(long = "n", global = true, default_value_t = 512)]
    n: usize,

    /// Decay rate of the relaxation equations.
    #[arg(long, global = true, default_value_t = 1.0)]
    rate: f64,

    /// Elastic modulus of the Blair element.
    #[arg(long = "E", global = true, default_value_t = 1.0)]
    modulus: f64,

    /// Viscosity to modulus ratio of the Blair element.
    #[arg(long, global = true, default_value_t = 1.0)]
    chi: f64,

    /// Fractal gravitational constant.
    #[arg(long, global = true, default_value_t = 0.5)]
    gf: f64,

    /// Tautochrone descent time.
    #[arg(long = "T", global = true, default_value_t = PI)]
    t: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Staircase values and Cantor-set membership on n points of [0, 1].
    Staircase,
    /// Local derivative, or the Riemann-Liouville derivative with --beta, on x = i/n.
    Deriv(ProfileArgs),
    /// Staircase integral from 0, or the Riemann-Liouville integral with --beta, on x = i/n.
    Integ(ProfileArgs),
    /// Laplace transform test vectors with the numerically computed transform.
    Laplace {
        /// Fixture CSV to evaluate instead of the built-in set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Linear relaxation equations.
    Ode {
        #[arg(long, value_enum, default_value_t = OdeKind::Local)]
        kind: OdeKind,
        /// Initial value y(0).
        #[arg(long, default_value_t = 1.0)]
        init: f64,
    },
    /// Tautochrone density on heights y = i/n.
    Tautochrone,
    /// Blair stress under a unit step strain on t = i/n.
    Blair,
    /// Runs the built-in oracle checks.
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OdeKind {
    /// exp(-rate S(x))
    Local,
    /// closed form S^(alpha-1) E_{beta,alpha}(-rate S^beta)
    Nonlocal,
    /// Grünwald march of the non-local equation
    Gl,
    /// local and non-local side by side
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileKind {
    /// exp(-u)
    ExpNeg,
    /// exp(u)
    Exp,
    /// u
    Identity,
    /// 1
    Const,
    /// u^eta
    Pow,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long, value_enum, default_value_t = ProfileKind::ExpNeg)]
    profile: ProfileKind,
    /// Exponent for --profile pow.
    #[arg(long, default_value_t = 1.0)]
    eta: f64,
}

impl ProfileArgs {
    fn build(&self) -> Profile {
        match self.profile {
            ProfileKind::ExpNeg => Profile::exp(-1.0),
            ProfileKind::Exp => Profile::exp(1.0),
            ProfileKind::Identity => Profile::identity(),
            ProfileKind::Const => Profile::characteristic(),
            ProfileKind::Pow => Profile::power(self.eta),
        }
    }
}

enum Output {
    Series(GridSeries),
    Text(String),
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Range { .. } => Failure::Usage(e.to_string()),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

/// Runs `fcalc` with `argv` (program name first) against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs `fcalc` writing to the given streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            return if informational {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                1
            };
        }
    };
    let (result, passed) = match execute(&cli) {
        Ok(Output::Text(t)) => {
            let ok = !t.contains("FAIL");
            (emit(&cli, t, out), ok)
        }
        Ok(Output::Series(g)) => {
            let text = match cli.format {
                Format::Csv => g.to_csv(),
                Format::Json => {
                    let mut j = serde_json::to_string_pretty(&g.to_json()).expect("JSON values are finite");
                    j.push('\n');
                    j
                }
            };
            (emit(&cli, text, out), true)
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "fcalc: {m}");
            return 1;
        }
        Err(Failure::Numerical(m)) => {
            let _ = writeln!(err, "fcalc: {m}");
            return 2;
        }
    };
    match result {
        Err(e) => {
            let _ = writeln!(err, "fcalc: {e}");
            2
        }
        Ok(()) if !passed => 2,
        Ok(()) => 0,
    }
}

fn emit(cli: &Cli, text: String, out: &mut dyn Write) -> io::Result<()> {
    match &cli.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes()),
        None => out.write_all(text.as_bytes()),
    }
}

fn single_beta(cli: &Cli) -> Result<Option<f64>, Failure> {
    match &cli.beta {
        None => Ok(None),
        Some(text) => text
            .trim()
            .parse::<f64>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("--beta expects one number here, got '{text}'"))),
    }
}

fn beta_list(cli: &Cli, default: f64) -> Result<Vec<f64>, Failure> {
    match &cli.beta {
        None => Ok(vec![default]),
        Some(text) => text
            .split(',')
            .map(|b| {
                b.trim()
                    .parse::<f64>()
                    .map_err(|_| Failure::Usage(format!("bad --beta entry '{b}'")))
            })
            .collect(),
    }
}

/// `x_i = i L / n`, `i = 1..n`.
fn interior_grid(spec: &CantorSpec, n: usize) -> Vec<f64> {
    (1..=n).map(|i| spec.length() * i as f64 / n as f64).collect()
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    if cli.n < 2 {
        return Err(Failure::Usage(format!("--n must be at least 2, got {}", cli.n)));
    }
    let spec = CantorSpec::triadic().with_alpha(cli.alpha)?;
    match &cli.command {
        Command::Staircase => {
            let mut g = GridSeries::uniform(&spec, cli.n)?;
            let values = g.s().iter().map(|&s| Some(s)).collect();
            let flags = g
                .x()
                .iter()
                .map(|&x| spec.contains(x).map(|b| Some(if b { 1.0 } else { 0.0 })))
                .collect::<Result<Vec<_>, _>>()?;
            g.push_column("value", values)?;
            g.push_column("in_set", flags)?;
            g.set_meta("n", cli.n.to_string());
            Ok(Output::Series(g))
        }
        Command::Deriv(args) | Command::Integ(args) => {
            let derivative = matches!(cli.command, Command::Deriv(_));
            let p = args.build();
            let beta = single_beta(cli)?;
            let mut g = GridSeries::on_grid(&spec, interior_grid(&spec, cli.n))?;
            let f = g.s().iter().map(|&u| Some(p.eval(u))).collect();
            let xs = g.x().to_vec();
            let column = xs
                .iter()
                .map(|&x| {
                    let v = match (beta, derivative) {
                        (None, true) => local::falpha_derivative(&spec, &p, x),
                        (None, false) => local::falpha_integral(&spec, &p, 0.0, x),
                        (Some(b), true) => nonlocal::rl_derivative(&spec, &p, &OrderPair::for_spec(&spec, b)?, x),
                        (Some(b), false) => nonlocal::rl_integral(&spec, &p, &OrderPair::for_spec(&spec, b)?, x),
                    };
                    v.map(Some)
                })
                .collect::<Result<Vec<_>, _>>()?;
            g.push_column("value", f)?;
            g.push_column(if derivative { "derivative" } else { "integral" }, column)?;
            g.set_meta("profile", p.description());
            if let Some(b) = beta {
                g.set_meta("beta", format_float(b));
            }
            Ok(Output::Series(g))
        }
        Command::Laplace { fixtures } => {
            let rows = match fixtures {
                Some(path) => {
                    let file = File::open(path).map_err(|e| Failure::Numerical(format!("{}: {e}", path.display())))?;
                    laplace::read_fixtures(BufReader::new(file))?
                }
                None => laplace::default_fixtures()?,
            };
            Ok(Output::Text(fixture_table(&rows, cli.format)?))
        }
        Command::Ode { kind, init } => {
            let beta = single_beta(cli)?.unwrap_or(0.33);
            let local_prob = LinearFdeProblem::local()
                .with_spec(spec)
                .with_rate(cli.rate)
                .with_init(*init)
                .with_grid(cli.n);
            let nonlocal_prob = LinearFdeProblem {
                beta,
                ..LinearFdeProblem::nonlocal(beta)
            }
            .with_spec(spec)
            .with_rate(cli.rate)
            .with_init(*init)
            .with_grid(cli.n);
            let g = match kind {
                OdeKind::Local => ode::solve_local(&local_prob)?,
                OdeKind::Nonlocal => ode::solve_nonlocal(&nonlocal_prob)?,
                OdeKind::Gl => ode::gl_stepper(&nonlocal_prob)?,
                OdeKind::Compare => {
                    let a = ode::solve_local(&local_prob)?;
                    let b = ode::solve_nonlocal(&nonlocal_prob)?;
                    let mut c = ode::compare_runs(&a, &b)?;
                    c.set_meta("beta", format_float(beta));
                    c
                }
            };
            Ok(Output::Series(g))
        }
        Command::Tautochrone => {
            let params = TautochroneParams::new(cli.gf, cli.t)?;
            let g = physics::tautochrone_solve(&spec, &params, &interior_grid(&spec, cli.n))?;
            Ok(Output::Series(g))
        }
        Command::Blair => {
            let betas = beta_list(cli, 0.5)?;
            let base = BlairParams::new(cli.modulus, cli.chi, 0.0)?;
            let g = physics::blair_sweep(&spec, &base, &betas, &Profile::characteristic(), cli.n)?;
            Ok(Output::Series(g))
        }
        Command::Selfcheck => Ok(Output::Text(selfcheck::render(&selfcheck::run_all()))),
    }
}

fn fixture_table(rows: &[Fixture], format: Format) -> Result<String, Failure> {
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            laplace::write_fixture_report(&mut buf, rows)?;
            Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
        }
        Format::Json => {
            let mut columns: Vec<(&str, Vec<serde_json::Value>)> = FIXTURE_HEADER
                .split(',')
                .chain(["computed"])
                .map(|h| (h, Vec::new()))
                .collect();
            for f in rows {
                let computed = f.compute()?;
                let values = [
                    serde_json::json!(f.shape.name()),
                    serde_json::json!(f.zeta),
                    serde_json::json!(f.mu),
                    serde_json::json!(f.xi),
                    serde_json::json!(f.a),
                    serde_json::json!(f.b),
                    serde_json::json!(f.n),
                    serde_json::json!(f.s),
                    serde_json::json!(f.expected),
                    serde_json::json!(computed),
                ];
                for (col, v) in columns.iter_mut().zip(values) {
                    col.1.push(v);
                }
            }
            let obj: serde_json::Map<String, serde_json::Value> = columns
                .into_iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::Array(v)))
                .collect();
            let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(obj)).expect("finite values");
            text.push('\n');
            Ok(text)
        }
    }
}
