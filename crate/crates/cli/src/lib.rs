//! The `weakdiscord` command line: trajectory sweeps, single-point
//! evaluation, sudden-change reports and the closed-vs-numeric check.
//!
//! Time is always the dimensionless `γt`; every channel runs at unit rate.

mod format;
mod verify;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use weakdiscord_core::correlations::{summary_closed, summary_numeric};
use weakdiscord_core::dynamics::DEFAULT_KINK_THRESHOLD;
use weakdiscord_core::{
    evolve_c, strongest_kink, sweep, BellDiagonalState, ChannelKind, Error, KinkReport, Method,
    PauliChannel, Series, SweepConfig, TrajectoryPoint,
};

pub use format::{csv_header, format_sig, round_sig, write_csv};
pub use verify::{verify_report, VerifyOptions, VerifyOutcome};

#[derive(Debug, Parser)]
#[command(
    name = "weakdiscord",
    version,
    about = "Discord and weak-measurement discord of dephasing Bell-diagonal states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every measure on a uniform γt grid.
    Sweep(SweepArgs),
    /// Evaluate every measure at a single γt.
    Point(PointArgs),
    /// Report the strongest slope jump of each correlation series.
    Kink(KinkArgs),
    /// Check closed forms against numerical minimization on random states.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub c1: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub c2: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub c3: f64,
    #[arg(long, default_value = "phase")]
    pub channel: ChannelKind,
    /// Measurement strengths, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0.5",
        allow_negative_numbers = true
    )]
    pub x: Vec<f64>,
    #[arg(long, default_value = "closed")]
    pub method: Method,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 2.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 401)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma_t: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct KinkArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Slope jump, in bits per unit γt, above which a kink is flagged.
    #[arg(long, default_value_t = DEFAULT_KINK_THRESHOLD)]
    pub threshold: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Corrupts the closed-form discord so the check must fail.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Model(Error),
    Io(std::io::Error),
    VerifyFailed,
}

impl Failure {
    /// 1 for a failed verification, 3 when the minimizer does not converge,
    /// 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::VerifyFailed => 1,
            Failure::Model(Error::OptimizerFailure { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Model(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "i/o: {e}"),
            Failure::VerifyFailed => f.write_str("verification failed"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs a parsed command, writing its output to `--out` or `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    let (text, out, verdict) = match &cli.command {
        Command::Sweep(a) => (cmd_sweep(a)?, &a.out, Ok(())),
        Command::Point(a) => (cmd_point(a)?, &a.out, Ok(())),
        Command::Kink(a) => (cmd_kink(a)?, &a.out, Ok(())),
        Command::Verify(a) => {
            let outcome = verify_report(&VerifyOptions {
                samples: a.samples,
                seed: a.seed,
                inject_fault: a.inject_fault,
            })?;
            let verdict = if outcome.passed {
                Ok(())
            } else {
                Err(Failure::VerifyFailed)
            };
            (outcome.report, &a.out, verdict)
        }
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    verdict
}

fn initial_state(a: &StateArgs) -> Result<BellDiagonalState, Failure> {
    Ok(BellDiagonalState::new(a.c1, a.c2, a.c3)?)
}

pub fn sweep_config(state: &StateArgs, grid: &GridArgs) -> Result<SweepConfig, Failure> {
    let cfg = SweepConfig {
        initial: initial_state(state)?,
        channel: PauliChannel::unit_rate(state.channel),
        x_values: state.x.clone(),
        t_max: grid.t_max,
        steps: grid.steps,
        method: state.method,
    };
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Serialize)]
struct SqdValue {
    x: f64,
    value: f64,
}

#[derive(Serialize)]
struct SweepRow {
    gamma_t: f64,
    mutual_info: f64,
    classical: f64,
    discord: f64,
    sqd: Vec<SqdValue>,
}

pub fn cmd_sweep(a: &SweepArgs) -> Result<String, Failure> {
    let cfg = sweep_config(&a.state, &a.grid)?;
    let points = sweep(&cfg)?;
    match a.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&mut buf, &cfg.x_values, &points)?;
            Ok(String::from_utf8(buf).expect("csv output is ascii"))
        }
        Format::Json => {
            let rows: Vec<SweepRow> = points.iter().map(json_row).collect();
            Ok(serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n")
        }
    }
}

fn json_row(p: &TrajectoryPoint) -> SweepRow {
    SweepRow {
        gamma_t: round_sig(p.gamma_t),
        mutual_info: round_sig(p.mutual_info),
        classical: round_sig(p.classical),
        discord: round_sig(p.discord),
        sqd: p
            .sqd
            .iter()
            .map(|&(x, value)| SqdValue {
                x,
                value: round_sig(value),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct PointReport {
    mutual_info: f64,
    classical: f64,
    discord: f64,
    sqd: f64,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    argmin_theta_phi: Option<[f64; 2]>,
}

pub fn cmd_point(a: &PointArgs) -> Result<String, Failure> {
    let initial = initial_state(&a.state)?;
    let &[x] = a.state.x.as_slice() else {
        return Err(Failure::Usage(format!(
            "point takes a single --x, got {}",
            a.state.x.len()
        )));
    };
    let state = evolve_c(
        &initial,
        &PauliChannel::unit_rate(a.state.channel),
        a.gamma_t,
    )?;
    let summary = match a.state.method {
        Method::ClosedForm => summary_closed(&state, &[x])?,
        Method::Numeric => summary_numeric(&state.to_density_matrix()?, &[x])?,
    };
    let report = PointReport {
        mutual_info: round_sig(summary.mutual_info),
        classical: round_sig(summary.classical),
        discord: round_sig(summary.discord),
        sqd: round_sig(summary.sqd[0]),
        method: a.state.method,
        argmin_theta_phi: summary.sqd_argmin[0].map(|d| [round_sig(d.theta()), round_sig(d.phi())]),
    };
    Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n")
}

/// Strongest kink of each series, computed from the values exactly as
/// they appear in the CSV.
pub fn kink_reports(
    x_values: &[f64],
    points: &[TrajectoryPoint],
    threshold: f64,
) -> Result<Vec<KinkReport>, Failure> {
    let series = [Series::Classical, Series::Discord]
        .into_iter()
        .chain((0..x_values.len()).map(Series::Sqd));
    let mut reports = Vec::new();
    for s in series {
        let rounded: Vec<(f64, f64)> = s
            .extract(points)
            .into_iter()
            .map(|(t, v)| (round_sig(t), round_sig(v)))
            .collect();
        reports.push(strongest_kink(&s.name(x_values), &rounded, threshold)?);
    }
    Ok(reports)
}

pub fn cmd_kink(a: &KinkArgs) -> Result<String, Failure> {
    if !(a.threshold.is_finite() && a.threshold >= 0.0) {
        return Err(Failure::Usage(format!(
            "threshold must be a non-negative number, got {}",
            a.threshold
        )));
    }
    let cfg = sweep_config(&a.state, &a.grid)?;
    let points = sweep(&cfg)?;
    let reports = kink_reports(&cfg.x_values, &points, a.threshold)?;
    Ok(serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n")
}
