use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use toricnf::commands::{self, Overrides, Settings};
use toricnf::corpus::{bundled_dir, run_corpus};
use toricnf::error::{exit, CliError, Result};
use toricnf::input::{parse_int_list, split_list, Format, InputSpec, TiebreakName, BOUND_VAR};
use toricnf::report::{to_json, to_text};

#[derive(Parser)]
#[command(name = "toricnf", version, about = "Toric ideals, Newton filtrations and H̄ checks for affine semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input file (JSON or whitespace matrix, one generator per line); `-` reads stdin.
    #[arg(long, short)]
    input: PathBuf,
    /// Search bound, a rational such as 8 or 17/2.
    #[arg(long, env = BOUND_VAR)]
    bound: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Umbrella, toric ideal, Newton filtration, H̄ check and volume.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Weights for the reported umbrella, comma separated.
        #[arg(long)]
        weight: Option<String>,
        /// Include every round of the enlargement procedure.
        #[arg(long)]
        trace: bool,
        /// Include wall-clock timings (the output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Reduced Gröbner basis of the toric ideal.
    Toric {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum)]
        tiebreak: Option<TiebreakName>,
    },
    /// Facets, faces and functionals of the umbrella for a weight (default all ones).
    Umbrella {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Membership of a target in H̄, or the bounded search for H̄ ∖ H.
    Hbar {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: Option<String>,
        /// Work in the semigroup H ∩ C_τ of the face spanned by these generators (1-based).
        #[arg(long)]
        face: Option<String>,
        #[arg(long)]
        degree_bound: Option<String>,
        #[arg(long)]
        witness_bound: Option<String>,
    },
    /// Normalized volume of the hull of the generators and the origin.
    Volume {
        #[command(flatten)]
        common: Common,
    },
    /// Run every fixture and snapshot in a directory.
    Corpus {
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn emit<T: Serialize>(value: &T, format: Format) -> Result<()> {
    let out = match format {
        Format::Json => to_json(value)?,
        Format::Text => to_text(value)?,
    };
    print!("{out}");
    Ok(())
}

fn load(common: &Common) -> Result<(InputSpec, Format)> {
    let spec = InputSpec::read(&common.input)?;
    let format = common.format.or(spec.options.format).unwrap_or(Format::Json);
    Ok((spec, format))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { common, weight, trace, timing } => {
            let (spec, format) = load(&common)?;
            let o = Overrides { bound: common.bound, weight: weight.as_deref().map(split_list), trace, timing, ..Default::default() };
            emit(&commands::analyze(&spec, &Settings::resolve(&spec, &o)?)?, format)
        }
        Command::Toric { common, weight, tiebreak } => {
            let (spec, format) = load(&common)?;
            let o = Overrides { weight: weight.as_deref().map(split_list), tiebreak, ..Default::default() };
            emit(&commands::toric(&spec, &Settings::resolve(&spec, &o)?)?, format)
        }
        Command::Umbrella { common, weight } => {
            let (spec, format) = load(&common)?;
            let o = Overrides { weight: weight.as_deref().map(split_list), ..Default::default() };
            emit(&commands::umbrella_cmd(&spec, &Settings::resolve(&spec, &o)?)?, format)
        }
        Command::Hbar { common, target, face, degree_bound, witness_bound } => {
            let (spec, format) = load(&common)?;
            let o = Overrides { bound: common.bound, degree_bound, witness_bound, ..Default::default() };
            let target = target.as_deref().map(parse_int_list).transpose()?;
            let face = match face.as_deref() {
                Some(s) => Some(
                    parse_int_list(s)?
                        .into_iter()
                        .map(|x| usize::try_from(x).map_err(|_| CliError::Usage(format!("bad generator index {x}"))))
                        .collect::<Result<Vec<_>>>()?,
                ),
                None => None,
            };
            emit(&commands::hbar(&spec, &Settings::resolve(&spec, &o)?, target.as_deref(), face.as_deref())?, format)
        }
        Command::Volume { common } => {
            let (spec, format) = load(&common)?;
            emit(&commands::volume(&spec)?, format)
        }
        Command::Corpus { dir, format } => {
            let report = run_corpus(&dir.unwrap_or_else(bundled_dir))?;
            for f in &report.fixtures {
                eprintln!("{} {}", if f.passed { "PASS" } else { "FAIL" }, f.fixture);
                for m in &f.failures {
                    eprintln!("  {m}");
                }
            }
            emit(&report, format.unwrap_or(Format::Json))?;
            if report.failed > 0 {
                return Err(CliError::CorpusFailed { failed: report.failed, total: report.fixtures.len() });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
