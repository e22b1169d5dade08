//! Command-line front end: every operation is reachable through a
//! subcommand with reproducible CSV/JSON output.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds;
use crate::error::Error;
use crate::experiments;
use crate::grover::{self, ProblemSize};
use crate::integrator::{self, Mode, FULL_STATE_CAP};
use crate::schedule::{build_local_adiabatic, ScheduleKind, ScheduleSpec};

#[derive(Parser)]
#[command(
    name = "grover-anneal",
    about = "Quantum annealing of Grover's search under real- and imaginary-time dynamics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// imaginary-time dynamics (norm-decaying)
    It,
    /// real-time dynamics (unitary)
    Rt,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::It => Mode::ImaginaryTime,
            ModeArg::Rt => Mode::RealTime,
        }
    }
}

impl ModeArg {
    fn label(self) -> &'static str {
        match self {
            ModeArg::It => "it",
            ModeArg::Rt => "rt",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScheduleArg {
    /// linear ramp s(t) = t/tau
    Linear,
    /// gap-adapted ramp (slows near the minimum gap)
    Adiabatic,
}

impl From<ScheduleArg> for ScheduleKind {
    fn from(k: ScheduleArg) -> ScheduleKind {
        match k {
            ScheduleArg::Linear => ScheduleKind::Linear,
            ScheduleArg::Adiabatic => ScheduleKind::LocalAdiabatic,
        }
    }
}

impl ScheduleArg {
    fn label(self) -> &'static str {
        match self {
            ScheduleArg::Linear => "linear",
            ScheduleArg::Adiabatic => "adiabatic",
        }
    }
}

#[derive(Args)]
struct EvolveCmd {
    /// database size N
    #[arg(long)]
    n: u64,
    /// annealing time
    #[arg(long)]
    tau: f64,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "linear")]
    schedule: ScheduleArg,
    /// RK4 step count (default: dt policy)
    #[arg(long)]
    steps: Option<u64>,
    /// record every STRIDE-th step (default: about 1000 samples)
    #[arg(long)]
    stride: Option<u64>,
    /// output CSV path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GapCmd {
    #[arg(long)]
    n: u64,
    /// number of s samples across [0, 1]
    #[arg(long, default_value_t = 201)]
    points: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanCmd {
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 0.99)]
    target: f64,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "linear")]
    schedule: ScheduleArg,
    #[arg(long, default_value_t = 1e-3)]
    rel_tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScalingCmd {
    #[arg(long, default_value_t = 0.99)]
    target: f64,
    #[arg(long, value_enum, default_value = "it")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "linear")]
    schedule: ScheduleArg,
    /// power-of-two size range as LO:HI exponents, e.g. 4:20
    #[arg(long, default_value = "4:20")]
    n_exp: String,
    /// optional CSV path for the (N, tau*) table
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON report path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AsymptoteCmd {
    #[arg(long)]
    n: u64,
    /// comma-separated annealing times, e.g. 200,400,800,1600
    #[arg(long, default_value = "200,400,800,1600")]
    tau_list: String,
    #[arg(long, value_enum, default_value = "it")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "linear")]
    schedule: ScheduleArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareCmd {
    #[arg(long, default_value_t = 0.99)]
    target: f64,
    #[arg(long, default_value = "8:18")]
    n_exp: String,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsCmd {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    tau: f64,
    /// amplitude-ratio target entering tau_required
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateCmd {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    tau: f64,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "linear")]
    schedule: ScheduleArg,
    #[arg(long)]
    steps: Option<u64>,
    /// full-space size cap
    #[arg(long, default_value_t = FULL_STATE_CAP)]
    cap: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one trajectory and emit t,s,p_opt,log_norm,gap samples
    Evolve(EvolveCmd),
    /// Sweep the instantaneous spectrum over s
    Gap(GapCmd),
    /// Find the annealing time reaching a target success probability
    Scan(ScanCmd),
    /// Scan a range of sizes and fit tau* against ln N
    Scaling(ScalingCmd),
    /// Fit the decay exponent of 1 - P_opt over long annealing times
    Asymptote(AsymptoteCmd),
    /// Compare linear and gap-adapted schedules across sizes
    Compare(CompareCmd),
    /// Evaluate the closed-form analytic bounds
    Bounds(BoundsCmd),
    /// Check the full-space dynamics against the two-level reduction
    Validate(ValidateCmd),
}

/// Round-trippable decimal rendering used for all CSV numbers.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn json_report(config: serde_json::Value, result: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&json!({ "config": config, "result": result }))
        .expect("report serialization cannot fail");
    s.push('\n');
    s
}

fn parse_exp_range(spec: &str) -> Result<Vec<u64>, Error> {
    let (lo, hi) = spec
        .split_once(':')
        .ok_or_else(|| Error::domain(format!("size range must look like LO:HI, got {spec:?}")))?;
    let lo: u32 = lo.trim().parse().map_err(|_| Error::domain(format!("bad exponent {lo:?}")))?;
    let hi: u32 = hi.trim().parse().map_err(|_| Error::domain(format!("bad exponent {hi:?}")))?;
    if lo < 1 || hi < lo || hi > 62 {
        return Err(Error::domain(format!("exponent range {lo}:{hi} out of order or range")));
    }
    Ok((lo..=hi).map(|e| 1u64 << e).collect())
}

fn parse_tau_list(spec: &str) -> Result<Vec<f64>, Error> {
    let taus: Vec<f64> = spec
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| Error::domain(format!("bad tau {p:?}"))))
        .collect::<Result<_, _>>()?;
    if taus.iter().any(|&t| t <= 0.0) {
        return Err(Error::domain("annealing times must be positive".to_string()));
    }
    Ok(taus)
}

fn build_schedule(
    n: ProblemSize,
    tau: f64,
    kind: ScheduleArg,
) -> Result<ScheduleSpec, Error> {
    match kind {
        ScheduleArg::Linear => ScheduleSpec::linear(tau),
        ScheduleArg::Adiabatic => build_local_adiabatic(n, tau, 1e-9),
    }
}

fn run_command(cmd: &Command) -> Result<(), CliFailure> {
    match cmd {
        Command::Evolve(c) => {
            let n = ProblemSize::new(c.n)?;
            let spec = build_schedule(n, c.tau, c.schedule)?;
            let steps = c.steps.unwrap_or_else(|| integrator::default_steps(c.tau));
            let stride = c.stride.unwrap_or_else(|| (steps / 1000).max(1));
            let traj = integrator::evolve_sampled(n, &spec, c.mode.into(), steps, stride)?;
            let mut csv = format!(
                "# grover-anneal evolve n={} tau={} mode={} schedule={} steps={} stride={}\n",
                c.n,
                num(c.tau),
                c.mode.label(),
                c.schedule.label(),
                steps,
                stride
            );
            csv.push_str("t,s,p_opt,log_norm,gap\n");
            for s in &traj.samples {
                writeln!(
                    csv,
                    "{},{},{},{},{}",
                    num(s.t),
                    num(s.s),
                    num(s.p_opt),
                    num(s.log_norm),
                    num(s.gap)
                )
                .expect("string write");
            }
            emit(&c.out, &csv)?;
        }
        Command::Gap(c) => {
            let n = ProblemSize::new(c.n)?;
            if c.points < 2 {
                return Err(Error::domain("need at least 2 sweep points".to_string()).into());
            }
            let mut csv = format!("# grover-anneal gap n={} points={}\n", c.n, c.points);
            csv.push_str("s,gap,eps0,eps1,p_coeff,q_coeff\n");
            for i in 0..c.points {
                let s = i as f64 / (c.points - 1) as f64;
                let sd = grover::spectral_data(n, s)?;
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    num(s),
                    num(sd.gap),
                    num(sd.eps0),
                    num(sd.eps1),
                    num(sd.p_coeff),
                    num(sd.q_coeff)
                )
                .expect("string write");
            }
            emit(&c.out, &csv)?;
        }
        Command::Scan(c) => {
            let n = ProblemSize::new(c.n)?;
            let tau =
                experiments::scan_tau(n, c.target, c.mode.into(), c.schedule.into(), c.rel_tol)?;
            let report = json_report(
                json!({
                    "subcommand": "scan",
                    "n": c.n,
                    "target": c.target,
                    "mode": c.mode.label(),
                    "schedule": c.schedule.label(),
                    "rel_tol": c.rel_tol,
                }),
                json!({ "tau_star": tau }),
            );
            emit(&c.out, &report)?;
        }
        Command::Scaling(c) => {
            let sizes = parse_exp_range(&c.n_exp)?;
            let fit =
                experiments::scaling_study(&sizes, c.target, c.mode.into(), c.schedule.into())?;
            if c.csv.is_some() {
                let mut csv = format!(
                    "# grover-anneal scaling target={} mode={} schedule={} n_exp={}\n",
                    num(c.target),
                    c.mode.label(),
                    c.schedule.label(),
                    c.n_exp
                );
                csv.push_str("ln_n,tau_star\n");
                for (x, y) in &fit.points {
                    writeln!(csv, "{},{}", num(*x), num(*y)).expect("string write");
                }
                emit(&c.csv, &csv)?;
            }
            let report = json_report(
                json!({
                    "subcommand": "scaling",
                    "target": c.target,
                    "mode": c.mode.label(),
                    "schedule": c.schedule.label(),
                    "n_exp": c.n_exp,
                }),
                serde_json::to_value(&fit).expect("fit serialization"),
            );
            emit(&c.out, &report)?;
        }
        Command::Asymptote(c) => {
            let n = ProblemSize::new(c.n)?;
            let taus = parse_tau_list(&c.tau_list)?;
            let fit =
                experiments::asymptotic_slope(n, &taus, c.mode.into(), c.schedule.into())?;
            let report = json_report(
                json!({
                    "subcommand": "asymptote",
                    "n": c.n,
                    "tau_list": taus,
                    "mode": c.mode.label(),
                    "schedule": c.schedule.label(),
                }),
                serde_json::to_value(&fit).expect("fit serialization"),
            );
            emit(&c.out, &report)?;
        }
        Command::Compare(c) => {
            let sizes = parse_exp_range(&c.n_exp)?;
            let table = experiments::schedule_comparison(&sizes, c.target)?;
            if c.csv.is_some() {
                let mut csv = format!(
                    "# grover-anneal compare target={} n_exp={}\n",
                    num(c.target),
                    c.n_exp
                );
                csv.push_str("n,tau_it_linear,tau_it_adiabatic,tau_rt_adiabatic\n");
                for r in &table.rows {
                    writeln!(
                        csv,
                        "{},{},{},{}",
                        r.n,
                        num(r.tau_it_linear),
                        num(r.tau_it_adiabatic),
                        num(r.tau_rt_adiabatic)
                    )
                    .expect("string write");
                }
                emit(&c.csv, &csv)?;
            }
            let report = json_report(
                json!({ "subcommand": "compare", "target": c.target, "n_exp": c.n_exp }),
                serde_json::to_value(&table).expect("table serialization"),
            );
            emit(&c.out, &report)?;
        }
        Command::Bounds(c) => {
            let n = ProblemSize::new(c.n)?;
            let report = bounds::bound_report(n, c.tau, c.delta)?;
            let out = json_report(
                json!({ "subcommand": "bounds", "n": c.n, "tau": c.tau, "delta": c.delta }),
                serde_json::to_value(&report).expect("report serialization"),
            );
            emit(&c.out, &out)?;
        }
        Command::Validate(c) => {
            let n = ProblemSize::new(c.n)?;
            let spec = build_schedule(n, c.tau, c.schedule)?;
            let steps = c.steps.unwrap_or_else(|| integrator::default_steps(c.tau));
            let p_reduced = integrator::final_probability(n, &spec, c.mode.into(), steps)?;
            let p_full = integrator::evolve_full(n, &spec, c.mode.into(), steps, c.cap)?;
            let report = json_report(
                json!({
                    "subcommand": "validate",
                    "n": c.n,
                    "tau": c.tau,
                    "mode": c.mode.label(),
                    "schedule": c.schedule.label(),
                    "steps": steps,
                    "cap": c.cap,
                }),
                json!({
                    "p_full": p_full,
                    "p_reduced": p_reduced,
                    "abs_diff": (p_full - p_reduced).abs(),
                }),
            );
            emit(&c.out, &report)?;
        }
    }
    Ok(())
}

enum CliFailure {
    Compute(Error),
    Io(std::io::Error),
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        CliFailure::Compute(e)
    }
}

impl From<std::io::Error> for CliFailure {
    fn from(e: std::io::Error) -> Self {
        CliFailure::Io(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::QuadratureNonConvergence { .. } | Error::BracketNotFound { .. } => 3,
        _ => 2,
    }
}

/// Parse `argv` (including the program name) and run the subcommand.
/// Returns the process exit code: 0 success, 2 argument errors,
/// 3 numerical failures.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_command(&cli.command) {
        Ok(()) => 0,
        Err(CliFailure::Compute(e)) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
        Err(CliFailure::Io(e)) => {
            eprintln!("io error: {e}");
            1
        }
    }
}
