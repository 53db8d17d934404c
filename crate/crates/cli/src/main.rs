//! Command-line harness: runs named verification suites with seeded
//! randomness and emits text or JSON reports.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on
//! configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use superwitt::error::Error;
use superwitt::report::{emit_report, Report, ReportFormat};
use superwitt::scalar::parse_rational_vec;
use superwitt::suites::{default_grid, parse_p_factors, run_suite, SuiteConfig, SuiteName, ALL_SUITES};
use superwitt::weyl::{AlgebraShape, Variant};
use superwitt::witt::{format_witt_element, parse_witt_generator, witt_bracket};

#[derive(Parser)]
#[command(name = "superwitt", version, about = "Exact verification of Witt superalgebra tensor modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Plus,
    Laurent,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Plus => Variant::Polynomial,
            VariantArg::Laurent => Variant::Laurent,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named verification suite, or the whole default grid.
    Verify {
        /// Suite name; see `--list`.
        suite: Option<String>,
        /// Run every suite over the default parameter grid.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// List the available suites and exit.
        #[arg(long)]
        list: bool,
        /// Even variables.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Odd variables.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Plus)]
        variant: VariantArg,
        /// P factors, comma separated: poly | quot | shift:<rat> | laurent:<rat>.
        #[arg(long)]
        p_factors: Option<String>,
        /// Apply the parity change to P.
        #[arg(long)]
        p_parity_shift: bool,
        /// Apply the sign twist to P.
        #[arg(long)]
        p_sign_twist: bool,
        /// lambda as comma-separated rationals, e.g. `1/2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Submodule parameter r (defaults to m).
        #[arg(long)]
        r: Option<usize>,
        /// Weight window radius.
        #[arg(long, default_value_t = 3)]
        weight_radius: i64,
        /// Operator degree bound.
        #[arg(long, default_value_t = 3)]
        op_degree: i64,
        /// Random samples per randomized check.
        #[arg(long, default_value_t = 200)]
        samples: u32,
        /// PRNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Write the report here; relative paths resolve against
        /// SUPERWITT_OUT_DIR when it is set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand the bracket of two standard basis elements,
    /// e.g. `bracket "t1^2*xi1*d/dt1" "t1*d/dxi1" --m 1 --n 1`.
    Bracket {
        x: String,
        y: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Plus)]
        variant: VariantArg,
    },
}

fn resolve_out(out: Option<PathBuf>) -> Option<PathBuf> {
    let out = out?;
    if out.is_relative() {
        if let Ok(dir) = std::env::var("SUPERWITT_OUT_DIR") {
            return Some(PathBuf::from(dir).join(out));
        }
    }
    Some(out)
}

fn emit(reports: &[Report], format: FormatArg, out: Option<PathBuf>) -> Result<(), Error> {
    let out = resolve_out(out);
    if let [report] = reports {
        let fmt = match format {
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Json => ReportFormat::Json,
        };
        let bytes = emit_report(report, fmt, out.as_deref())?;
        println!("{}", String::from_utf8_lossy(&bytes));
        return Ok(());
    }
    match format {
        FormatArg::Text => {
            let mut text = String::new();
            for r in reports {
                text.push_str(&r.to_text());
                text.push('\n');
            }
            if let Some(path) = &out {
                std::fs::write(path, &text)?;
            }
            print!("{text}");
        }
        FormatArg::Json => {
            let rendered = serde_json::to_string_pretty(
                &reports
                    .iter()
                    .map(|r| serde_json::from_str::<serde_json::Value>(&r.to_json()).unwrap())
                    .collect::<Vec<_>>(),
            )
            .expect("report serialization");
            if let Some(path) = &out {
                std::fs::write(path, &rendered)?;
            }
            println!("{rendered}");
        }
    }
    Ok(())
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            all,
            list,
            m,
            n,
            variant,
            p_factors,
            p_parity_shift,
            p_sign_twist,
            lambda,
            r,
            weight_radius,
            op_degree,
            samples,
            seed,
            format,
            out,
        } => {
            if list {
                for s in ALL_SUITES {
                    println!("{s}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports: Vec<Report> = if all {
                default_grid(seed)
                    .iter()
                    .map(run_suite)
                    .collect::<Result<_, _>>()?
            } else {
                let name: SuiteName = suite
                    .ok_or_else(|| Error::Config("missing suite name (or --all)".into()))?
                    .parse()?;
                let mut cfg = SuiteConfig::new(name, m, n, variant.into());
                if let Some(p) = p_factors {
                    cfg = cfg.with_p_factors(parse_p_factors(&p)?);
                }
                cfg.p_parity_shift = p_parity_shift;
                cfg.p_sign_twist = p_sign_twist;
                if let Some(l) = lambda {
                    cfg = cfg.with_lambda(parse_rational_vec(&l).map_err(|e| Error::Config(e.to_string()))?);
                }
                if let Some(r) = r {
                    cfg = cfg.with_r(r);
                }
                cfg.weight_radius = weight_radius;
                cfg.op_degree = op_degree;
                cfg.samples = samples;
                cfg.seed = seed;
                vec![run_suite(&cfg)?]
            };
            emit(&reports, format, out)?;
            if reports.iter().any(Report::any_failure) {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Bracket { x, y, m, n, variant } => {
            let shape = AlgebraShape::new(m, n, variant.into())
                .map_err(|e| Error::Config(e.to_string()))?;
            let gx = parse_witt_generator(&x, &shape).map_err(|e| Error::Config(e.to_string()))?;
            let gy = parse_witt_generator(&y, &shape).map_err(|e| Error::Config(e.to_string()))?;
            let b = witt_bracket(&gx, &gy).map_err(|e| Error::Config(e.to_string()))?;
            println!("[{gx}, {gy}] = {}", format_witt_element(&b));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(Error::Config(msg)) | Err(Error::Parse(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
