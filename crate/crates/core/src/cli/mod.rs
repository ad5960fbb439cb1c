//! Command-line front end: `construct`, `fibre` and `verify`.
//!
//! Exit codes: 0 verified (or success), 1 verdict false or hypotheses
//! violated, 2 usage error, 3 Groebner budget exceeded.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::FieldMode;
use crate::fibration::{
    analyze_fibre, build_example1, build_example2, build_example3, verify_dual_prime, verify_slope, BasePoint,
    Family, FibreOptions, FibreReport, FitOptions, ModelJson, Status, SurfaceModel, VerifyOptions, DUAL_PRIMES,
};
use crate::groebner::GroebnerConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "pencil5", version, about = "Genus-5 fibred surfaces: trigonal fibres and the slope equality")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Build a surface model and print it as JSON.
    Construct(CommonArgs),
    /// Analyse the fibre over one base point.
    Fibre {
        #[command(flatten)]
        common: CommonArgs,
        /// Base point as `t0,t1`, e.g. `1,0`.
        #[arg(long)]
        point: String,
    },
    /// Compute both sides of the slope equality and compare them.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated values of n for the Hilbert fit, e.g. `2,3,4`.
        #[arg(long)]
        window: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Example1,
    Example2,
    Example3,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long, value_enum, conflicts_with = "model")]
    pub family: Option<FamilyArg>,
    /// Scroll parameter of Example 2.
    #[arg(long)]
    pub a: Option<u32>,
    /// Parameter of Example 3 (`a = 2d - 1`).
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Model JSON produced by `construct`.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// `rational`, `prime:P` or `dual-prime`.
    #[arg(long, default_value = "rational")]
    pub mode: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Skip the fibre smoothness certificates.
    #[arg(long)]
    pub no_smoothness: bool,
    /// Maximum number of S-pair reductions per Groebner basis.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    Single(FieldMode),
    DualPrime,
}

impl FromStr for RunMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "dual-prime" {
            Ok(RunMode::DualPrime)
        } else {
            s.parse().map(RunMode::Single)
        }
    }
}

impl fmt::Display for RunMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunMode::Single(m) => write!(f, "{m}"),
            RunMode::DualPrime => write!(f, "dual-prime"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSource {
    Family { family: FamilyArg, a: u32, d: u32 },
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Construct,
    Fibre { point: String },
    Verify { window: Option<Vec<u32>> },
}

/// Validated settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub source: ModelSource,
    pub seed: u64,
    pub mode: RunMode,
    pub output: Option<PathBuf>,
    pub verbosity: u8,
    pub smoothness: bool,
    pub budget: u64,
}

impl RunConfig {
    /// Validates parsed arguments before any computation.
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let (common, command) = match cli.command {
            CommandArgs::Construct(c) => (c, Command::Construct),
            CommandArgs::Fibre { common, point } => (common, Command::Fibre { point }),
            CommandArgs::Verify { common, window } => {
                let window = window
                    .map(|w| {
                        w.split(',')
                            .map(|n| n.trim().parse::<u32>().map_err(|_| Error::InvalidParameter(format!("bad window `{w}`"))))
                            .collect::<Result<Vec<_>>>()
                    })
                    .transpose()?;
                (common, Command::Verify { window })
            }
        };
        let source = match (&common.model, common.family) {
            (Some(p), _) => ModelSource::File(p.clone()),
            (None, Some(family)) => {
                let a = common.a.unwrap_or(1);
                let d = common.d.unwrap_or(1);
                if family == FamilyArg::Example3 && d < 1 {
                    return Err(Error::InvalidParameter("Example 3 needs d >= 1".into()));
                }
                if (family != FamilyArg::Example2 && common.a.is_some()) || (family != FamilyArg::Example3 && common.d.is_some()) {
                    return Err(Error::InvalidParameter("--a applies to example2 and --d to example3 only".into()));
                }
                ModelSource::Family { family, a, d }
            }
            (None, None) => return Err(Error::InvalidParameter("pass --family or --model".into())),
        };
        let mode: RunMode = common.mode.parse()?;
        let budget = common.budget.unwrap_or_else(|| GroebnerConfig::from_env().budget);
        Ok(RunConfig {
            command,
            source,
            seed: common.seed,
            mode,
            output: common.output,
            verbosity: common.verbose,
            smoothness: !common.no_smoothness,
            budget,
        })
    }

    fn fibre_options(&self) -> FibreOptions {
        FibreOptions { groebner: GroebnerConfig { budget: self.budget }, smoothness: self.smoothness }
    }

    /// Field of the single-field computations (the first prime in dual mode).
    fn primary_mode(&self) -> FieldMode {
        match self.mode {
            RunMode::Single(m) => m,
            RunMode::DualPrime => FieldMode::prime(DUAL_PRIMES[0]).expect("prime"),
        }
    }
}

/// Builds or loads the model, in rational arithmetic.
pub fn load_model(cfg: &RunConfig) -> Result<SurfaceModel> {
    match &cfg.source {
        ModelSource::Family { family, a, d } => Ok(match family {
            FamilyArg::Example1 => build_example1(cfg.seed),
            FamilyArg::Example2 => build_example2(*a, cfg.seed)?,
            FamilyArg::Example3 => build_example3(*d, cfg.seed)?,
        }),
        ModelSource::File(p) => {
            let text = std::fs::read_to_string(p)?;
            let json: ModelJson = serde_json::from_str(&text)?;
            SurfaceModel::from_json(&json)
        }
    }
}

#[derive(Serialize)]
struct FibreOutput<'a> {
    schema_version: u32,
    family: &'a Family,
    seed: u64,
    field_mode: String,
    #[serde(flatten)]
    report: &'a FibreReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_prime_agreement: Option<bool>,
}

/// JSON text plus the exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub json: String,
    pub exit_code: i32,
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    let model = load_model(cfg)?;
    match &cfg.command {
        Command::Construct => {
            let m = model.to_mode(cfg.primary_mode())?;
            Ok(Output { json: serde_json::to_string_pretty(&m.to_json())?, exit_code: EXIT_OK })
        }
        Command::Fibre { point } => {
            let mode = cfg.primary_mode();
            let m = model.to_mode(mode)?;
            let p = BasePoint::parse(point, mode)?;
            let report = analyze_fibre(&m, &p, &cfg.fibre_options())?;
            let agreement = match cfg.mode {
                RunMode::DualPrime => {
                    let q = FieldMode::prime(DUAL_PRIMES[1]).expect("prime");
                    let other = analyze_fibre(&model.to_mode(q)?, &BasePoint::parse(point, q)?, &cfg.fibre_options())?;
                    Some(other.classification == report.classification && other.mu_rank == report.mu_rank)
                }
                RunMode::Single(_) => None,
            };
            let out = FibreOutput {
                schema_version: 1,
                family: &m.family,
                seed: m.seed,
                field_mode: cfg.mode.to_string(),
                report: &report,
                dual_prime_agreement: agreement,
            };
            let exit_code = if agreement == Some(false) { EXIT_FALSE } else { EXIT_OK };
            Ok(Output { json: serde_json::to_string_pretty(&out)?, exit_code })
        }
        Command::Verify { window } => {
            let opts = VerifyOptions { fibre: cfg.fibre_options(), fit: FitOptions { window: window.clone() } };
            let report = match cfg.mode {
                RunMode::Single(mode) => verify_slope(&model.to_mode(mode)?, &opts)?,
                RunMode::DualPrime => verify_dual_prime(&model, &opts)?,
            };
            let exit_code = if report.verdict && report.status == Status::Verified { EXIT_OK } else { EXIT_FALSE };
            Ok(Output { json: report.to_json_pretty()?, exit_code })
        }
    }
}

/// Exit code for an error raised while running a command.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvalidParameter(_)
        | Error::InvalidPrime(_)
        | Error::DegeneratePoint
        | Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::IndexOutOfRange(_)
        | Error::InvalidModel(_)
        | Error::NotTwistHomogeneous { .. }
        | Error::NotHomogeneous { .. }
        | Error::Json(_)
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FALSE,
    }
}

fn init_logging(verbosity: u8) {
    let level = match verbosity {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    let _ = env_logger::Builder::new().filter_level(level).parse_default_env().try_init();
}

/// Parses arguments, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| {
        init_logging(cfg.verbosity);
        let out = run(&cfg)?;
        match &cfg.output {
            Some(p) => std::fs::write(p, format!("{}\n", out.json))?,
            None => {
                use std::io::Write;
                // a closed pipe (e.g. `| head`) is not an error of the run
                let _ = writeln!(std::io::stdout().lock(), "{}", out.json);
            }
        }
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
