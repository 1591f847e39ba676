use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ptosc_cli::config::{ConfigError, Fault, Format, RunConfig, DEFAULT_EPS_SET};
use ptosc_cli::export::{
    contour_table, render_contour, DEFAULT_EXPORT_EPS, DEFAULT_Q_RANGE, DEFAULT_SAMPLES,
};
use ptosc_cli::report::render;
use ptosc_cli::suites::Suite;

#[derive(Parser)]
#[command(name = "ptosc", version, about = "Verification suites for the PT-symmetric oscillator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite, or all of them.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
        /// Upper level index.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Highest ε order of the commutator expansion.
        #[arg(long, default_value_t = 12)]
        order: usize,
        /// Overrides the main tolerance of each suite.
        #[arg(long)]
        tol: Option<f64>,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Export tabulated data.
    Export {
        #[arg(value_enum)]
        what: ExportArg,
        #[command(flatten)]
        common: Common,
        /// Half-width of the parameter interval.
        #[arg(long, default_value_t = DEFAULT_Q_RANGE)]
        q_range: f64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Coupling ε; repeat or separate with commas for several values.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    eps: Vec<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Accept |ε| above 0.5.
    #[arg(long)]
    allow_large_eps: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Spectrum,
    Orthonormality,
    Operators,
    Algebra,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportArg {
    Contour,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

fn parse_fault(s: &str) -> Result<Fault, ConfigError> {
    if s == "sign-flip" {
        return Ok(Fault::SignFlip);
    }
    s.strip_prefix("energy-shift=")
        .and_then(|v| v.parse().ok())
        .map(Fault::EnergyShift)
        .ok_or_else(|| ConfigError(format!("unknown fault {s:?}")))
}

fn init_threads() -> Result<(), ConfigError> {
    let Ok(v) = std::env::var("PTOSC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| ConfigError(format!("PTOSC_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| ConfigError(e.to_string()))
}

fn emit(out: &Option<PathBuf>, body: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

enum Failure {
    Config(ConfigError),
    Runtime(anyhow::Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<ptosc_core::Error> for Failure {
    fn from(e: ptosc_core::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    init_threads()?;
    match cli.command {
        Command::Verify { suite, common, n_max, order, tol, seed, inject_fault } => {
            let epsilons = match (common.eps.is_empty(), suite) {
                (false, _) => common.eps,
                (true, SuiteArg::All) => DEFAULT_EPS_SET.to_vec(),
                (true, _) => RunConfig::default().epsilons,
            };
            let cfg = RunConfig {
                epsilons,
                n_max,
                order,
                tol,
                format: common.format.into(),
                out: common.out,
                seed,
                allow_large_eps: common.allow_large_eps,
                fault: inject_fault.as_deref().map(parse_fault).transpose()?,
            };
            cfg.validate()?;
            let suites: &[Suite] = match suite {
                SuiteArg::Spectrum => &[Suite::Spectrum],
                SuiteArg::Orthonormality => &[Suite::Orthonormality],
                SuiteArg::Operators => &[Suite::Operators],
                SuiteArg::Algebra => &[Suite::Algebra],
                SuiteArg::All => &Suite::ALL,
            };
            let reports = suites
                .iter()
                .map(|s| s.run(&cfg))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&cfg.out, &render(&reports, cfg.format))?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Export { what: ExportArg::Contour, common, q_range, samples } => {
            let eps = match common.eps.as_slice() {
                [] => DEFAULT_EXPORT_EPS,
                [e] => *e,
                _ => return Err(ConfigError("export takes a single --eps".into()).into()),
            };
            let cfg = RunConfig {
                epsilons: vec![eps],
                allow_large_eps: common.allow_large_eps,
                ..Default::default()
            };
            cfg.validate()?;
            if samples < 2 {
                return Err(ConfigError(format!("--samples must be at least 2, got {samples}")).into());
            }
            if !(q_range > 0.0 && q_range.is_finite()) {
                return Err(ConfigError(format!("--q-range must be positive, got {q_range}")).into());
            }
            let table = contour_table(eps, q_range, samples)?;
            let (body, note) = render_contour(&table, common.format.into());
            emit(&common.out, &body)?;
            if let Some(note) = note {
                eprintln!("{note}");
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
