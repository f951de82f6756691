//! Command-line front end: `curve`, `max`, `mc-check` and `bloch`.
//!
//! Exit codes: 0 success, 1 Monte Carlo check failed, 2 bad arguments,
//! 3 I/O failure, 4 maximum on the bracket boundary.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::curve::{write_csv, Curve, CurveRequest};
use crate::error::Error;
use crate::mc::{compare, compare_sampled, Disorder, SampleConfig, RNG_ALGORITHM};
use crate::optimize::{Bracket, DEFAULT_TOL};
use crate::tls::{bloch_report, LambdaDisorder, ModelSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ARGS: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_BOUNDARY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tls-complexity", version, about = "Entropic complexity of two-level systems")]
pub struct Cli {
    /// Divide S, R2 and SC by ln 2.
    #[arg(long, global = true)]
    pub normalized: bool,

    /// Write the invocation as a JSON sidecar to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub meta: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a complexity curve on a grid and write CSV.
    Curve(CurveArgs),
    /// Locate the complexity maximum of a curve.
    Max(MaxArgs),
    /// Check a disorder closed form against Monte Carlo.
    McCheck(McArgs),
    /// Bloch-sphere report of a Landau-Zener eigenstate.
    Bloch(BlochArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelName {
    LzDiag,
    LzOffd,
    BinaryLambda,
    BinaryV,
    BoxLambda,
    BoxV,
    BinaryLambdaInv,
    BoxLambdaInv,
    Paramagnet,
    Ising,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelName,
    /// ε/W for the λ-disorder models.
    #[arg(long)]
    pub chi: Option<f64>,
    /// ε_B/(zJ) for the Ising model.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Curve label of the χ⁻¹ sweeps.
    #[arg(long)]
    pub zeta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub min: f64,
    #[arg(long)]
    pub max: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long)]
    pub log_grid: bool,
    /// CSV destination; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MaxArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, requires = "max")]
    pub min: Option<f64>,
    #[arg(long, requires = "min")]
    pub max: Option<f64>,
    /// Search in ln x; defaults to the model's own bracket scale.
    #[arg(long)]
    pub log_grid: Option<bool>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DisorderName {
    BinaryLambda,
    BinaryV,
    BoxLambda,
    BoxV,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub model: DisorderName,
    #[arg(long, default_value_t = 0.0)]
    pub chi: f64,
    #[arg(long)]
    pub tau: Option<f64>,
    #[arg(long)]
    pub kappa: Option<f64>,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Sample binary ensembles instead of averaging them exactly.
    #[arg(long)]
    pub sampled: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LzName {
    LzDiag,
    LzOffd,
}

#[derive(Debug, Args)]
pub struct BlochArgs {
    #[arg(long, value_enum)]
    pub model: LzName,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn args(e: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_ARGS,
            message: e.to_string(),
        }
    }

    fn io(e: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundaryMaximum { .. } => Self {
                code: EXIT_BOUNDARY,
                message: e.to_string(),
            },
            other => Self::args(other),
        }
    }
}

impl ModelArgs {
    pub fn curve(&self) -> Result<Curve, Error> {
        let chi = self.chi.unwrap_or(0.0);
        let zeta = || {
            self.zeta
                .ok_or_else(|| Error::InvalidConfig("--zeta is required for the χ⁻¹ sweeps".into()))
        };
        Ok(match self.model {
            ModelName::LzDiag => Curve::Tls(ModelSpec::LzDiagonal),
            ModelName::LzOffd => Curve::Tls(ModelSpec::LzOffDiagonal),
            ModelName::BinaryLambda => Curve::Tls(ModelSpec::binary_lambda(chi)?),
            ModelName::BinaryV => Curve::Tls(ModelSpec::BinaryV),
            ModelName::BoxLambda => Curve::Tls(ModelSpec::box_lambda(chi)?),
            ModelName::BoxV => Curve::Tls(ModelSpec::BoxV),
            ModelName::BinaryLambdaInv => Curve::ChiInverse {
                kind: LambdaDisorder::Binary,
                zeta: zeta()?,
            },
            ModelName::BoxLambdaInv => Curve::ChiInverse {
                kind: LambdaDisorder::Box,
                zeta: zeta()?,
            },
            ModelName::Paramagnet => Curve::Paramagnet,
            ModelName::Ising => {
                let alpha = self.alpha.unwrap_or(0.0);
                if !(alpha >= 0.0 && alpha.is_finite()) {
                    return Err(Error::InvalidConfig(format!("--alpha must be >= 0, got {alpha}")));
                }
                Curve::Ising { alpha }
            }
        })
    }
}

impl McArgs {
    pub fn config(&self) -> Result<SampleConfig, Error> {
        let need = |v: Option<f64>, flag: &str| {
            v.ok_or_else(|| Error::InvalidConfig(format!("{flag} is required for this model")))
        };
        let disorder = match self.model {
            DisorderName::BinaryLambda => Disorder::binary_lambda(self.chi, need(self.tau, "--tau")?),
            DisorderName::BoxLambda => Disorder::box_lambda(self.chi, need(self.tau, "--tau")?),
            DisorderName::BinaryV => Disorder::binary_v(need(self.kappa, "--kappa")?),
            DisorderName::BoxV => Disorder::box_v(need(self.kappa, "--kappa")?),
        };
        if self.chi < 0.0 {
            return Err(Error::InvalidConfig(format!("--chi must be >= 0, got {}", self.chi)));
        }
        SampleConfig::new(disorder, self.samples, self.seed)
    }
}

fn print_json<W: Write>(out: &mut W, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(Failure::io)?;
    writeln!(out).map_err(Failure::io)
}

fn cmd_curve<W: Write>(args: &CurveArgs, normalized: bool, stdout: &mut W) -> Result<(), Failure> {
    let req = CurveRequest {
        curve: args.model.curve()?,
        min: args.min,
        max: args.max,
        points: args.points,
        log_grid: args.log_grid,
        normalized,
    };
    let rows = req.evaluate()?;
    match &args.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
            write_csv(BufWriter::new(file), &rows)
                .map_err(|e| Failure::io(format!("{}: {e}", path.display())))
        }
        None => write_csv(&mut *stdout, &rows).map_err(Failure::io),
    }
}

fn cmd_max<W: Write>(args: &MaxArgs, stdout: &mut W) -> Result<(), Failure> {
    let curve = args.model.curve()?;
    let default = curve.default_bracket();
    let log = args.log_grid.unwrap_or(default.is_log_scale());
    let bracket = match (args.min, args.max) {
        (Some(lo), Some(hi)) => Bracket::new(lo, hi, log)?,
        _ => Bracket::new(default.lo(), default.hi(), log)?,
    };
    let max = curve.maximize(bracket, args.tol)?;
    let e = curve.entropy(max.x, false)?;
    let record = json!({
        "model": curve.name(),
        "params": curve.params(),
        "x_star": max.x,
        "sc_star_nats": e.complexity,
        "sc_star_normalized": e.scaled(true).complexity,
        "r_at_max": curve.radius(max.x)?,
    });
    print_json(stdout, &record)?;
    if max.at_boundary {
        return Err(Error::BoundaryMaximum { x: max.x }.into());
    }
    Ok(())
}

fn cmd_mc_check<W: Write>(args: &McArgs, normalized: bool, stdout: &mut W) -> Result<bool, Failure> {
    let config = args.config()?;
    let report = if args.sampled || !config.disorder.is_binary() {
        compare_sampled(&config, args.workers)?
    } else {
        compare(&config)?
    };
    let scale = if normalized { std::f64::consts::LN_2 } else { 1.0 };
    let record = json!({
        "z_s": report.z_s,
        "z_c": report.z_c,
        "sc_abs_dev": report.sc_abs_dev / scale,
        "n": config.n_samples,
        "seed": config.seed,
        "pass": report.pass,
    });
    print_json(stdout, &record)?;
    Ok(report.pass)
}

fn cmd_bloch<W: Write>(args: &BlochArgs, stdout: &mut W) -> Result<(), Failure> {
    let model = match args.model {
        LzName::LzDiag => ModelSpec::LzDiagonal,
        LzName::LzOffd => ModelSpec::LzOffDiagonal,
    };
    let st = bloch_report(model, args.x)?;
    let record = json!({
        "pop1": st.pop1,
        "pop0": st.pop0,
        "theta_plus_rad": st.theta_plus,
        "theta_plus_deg": st.theta_plus.to_degrees(),
        "theta_minus_rad": st.theta_minus,
        "theta_minus_deg": st.theta_minus.to_degrees(),
        "phi_plus": st.phi_plus,
        "phi_minus": st.phi_minus,
    });
    print_json(stdout, &record)
}

fn write_meta(path: &PathBuf, argv: &[String], command: &Command) -> Result<(), Failure> {
    let mut meta = json!({
        "argv": argv,
        "version": env!("CARGO_PKG_VERSION"),
    });
    if matches!(command, Command::McCheck(_)) {
        meta["rng"] = json!(RNG_ALGORITHM);
    }
    let file = File::create(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    print_json(&mut w, &meta)?;
    w.flush().map_err(Failure::io)
}

/// Parse `argv` and run, writing results to `stdout` and diagnostics to
/// `stderr`. Returns the process exit code.
pub fn run<I, T, W, E>(argv: I, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ARGS } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
            }
            return code;
        }
    };

    let result = (|| {
        if let Some(path) = &cli.meta {
            let argv: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
            write_meta(path, &argv, &cli.command)?;
        }
        match &cli.command {
            Command::Curve(a) => cmd_curve(a, cli.normalized, stdout).map(|_| EXIT_OK),
            Command::Max(a) => cmd_max(a, stdout).map(|_| EXIT_OK),
            Command::McCheck(a) => cmd_mc_check(a, cli.normalized, stdout).map(|pass| {
                if pass {
                    EXIT_OK
                } else {
                    EXIT_CHECK_FAILED
                }
            }),
            Command::Bloch(a) => cmd_bloch(a, stdout).map(|_| EXIT_OK),
        }
    })();

    match result {
        Ok(code) => {
            if code == EXIT_CHECK_FAILED {
                let _ = writeln!(stderr, "error: Monte Carlo check failed (|z| > 4)");
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
