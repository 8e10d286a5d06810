//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use cfconv_core::convolve::DEFAULT_GUARD_TERMS;
use cfconv_core::{derive_identity, guess_recurrence, ConvolutionSpec, GuessError, Rational};
use clap::error::ErrorKind;
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};

use crate::batch::{run_table, BatchError, TableKind};
use crate::error::{convolution_error, CliError};
use crate::input::{self, SeqSpec, Source};
use crate::render::{self, OutputFormat};

#[derive(Debug, Parser)]
#[command(name = "cfconv", version, about = "Certified binomial-convolution identities of C-finite sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Terms {
        #[command(flatten)]
        seqs: SeqArgs,
        #[arg(short = 'n', value_name = "COUNT", default_value_t = 10)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fit a minimal recurrence and generating function to a list of terms.
    Guess {
        /// JSON array of terms, or whitespace/comma separated terms.
        #[arg(value_name = "TERMS_FILE", required_unless_present = "terms", conflicts_with = "terms")]
        file: Option<PathBuf>,
        /// Terms given inline instead of from a file.
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        terms: Option<String>,
        /// Largest order to try; defaults to the most the data supports.
        #[arg(long, value_name = "D")]
        max_order: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generating function of a recurrence with initial terms.
    Rec2gf {
        #[command(flatten)]
        seqs: SeqArgs,
        /// Recurrence coefficients c_1..c_d of a(n) = c_1 a(n-1) + ... + c_d a(n-d).
        #[arg(long, value_name = "LIST", requires = "init", allow_hyphen_values = true)]
        rec: Option<String>,
        /// Initial terms a(0)..a(d-1).
        #[arg(long, value_name = "LIST", requires = "rec", allow_hyphen_values = true)]
        init: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Recurrence and initial terms of a proper generating function.
    Gf2rec {
        #[command(flatten)]
        seqs: SeqArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certified generating function of the binomial self-convolution.
    Selfconv {
        #[command(flatten)]
        seqs: SeqArgs,
        #[arg(long, value_name = "G", default_value_t = DEFAULT_GUARD_TERMS)]
        guard: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certified generating function of the binomial convolution of two sequences.
    Crossconv {
        #[command(flatten)]
        seqs: SeqArgs,
        #[arg(long, value_name = "G", default_value_t = DEFAULT_GUARD_TERMS)]
        guard: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Self-convolution identities of the k-bonacci numbers for k = 2..=KMAX.
    TableSelf {
        #[command(flatten)]
        table: TableArgs,
    },
    /// Cross identities of k1- and k2-bonacci numbers for 2 <= k1 <= k2 <= KMAX.
    TableCross {
        #[command(flatten)]
        table: TableArgs,
    },
}

/// Sequence specifications; repeatable, and taken in command-line order.
#[derive(Debug, Args)]
struct SeqArgs {
    /// Named sequence: fibonacci, lucas, tribonacci, pell, jacobsthal.
    #[arg(long = "seq", value_name = "NAME")]
    seq: Vec<String>,
    /// k-bonacci numbers, generating function x/(1 - x - ... - x^k).
    #[arg(long, value_name = "K", allow_negative_numbers = true)]
    kbonacci: Vec<i64>,
    /// Generating function such as "x/(1-x-x^2)".
    #[arg(long, value_name = "STRING", allow_hyphen_values = true)]
    gf: Vec<String>,
    /// Sequence file: {"recurrence": [...], "initial": [...]} or {"gf": {"num": ..., "den": ...}}.
    #[arg(long, value_name = "FILE")]
    json: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Record elapsed milliseconds (makes the output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_name = "KMAX", allow_negative_numbers = true)]
    kmax: i64,
    #[arg(long, value_name = "G", default_value_t = DEFAULT_GUARD_TERMS)]
    guard: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, value_name = "J", env = "CFCONV_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    output: OutputArgs,
}

/// Recovers the command-line order of the repeatable sequence flags.
fn ordered_specs(args: &SeqArgs, matches: &ArgMatches) -> Vec<SeqSpec> {
    let indices = |id: &str| matches.indices_of(id).map(Iterator::collect::<Vec<_>>).unwrap_or_default();
    let mut specs: Vec<(usize, SeqSpec)> = Vec::new();
    specs.extend(indices("seq").into_iter().zip(args.seq.iter().cloned().map(SeqSpec::Named)));
    specs.extend(indices("kbonacci").into_iter().zip(args.kbonacci.iter().copied().map(SeqSpec::Kbonacci)));
    specs.extend(indices("gf").into_iter().zip(args.gf.iter().cloned().map(SeqSpec::Gf)));
    specs.extend(indices("json").into_iter().zip(args.json.iter().cloned().map(SeqSpec::Json)));
    specs.sort_by_key(|(i, _)| *i);
    specs.into_iter().map(|(_, s)| s).collect()
}

fn exactly<const N: usize>(specs: Vec<SeqSpec>, command: &str) -> Result<[SeqSpec; N], CliError> {
    let got = specs.len();
    specs.try_into().map_err(|_| {
        CliError::usage(format!(
            "{command} takes exactly {N} sequence specification(s) (--seq, --kbonacci, --gf or --json), got {got}"
        ))
    })
}

fn sequence_of(spec: &SeqSpec) -> Result<cfconv_core::CFiniteSequence, CliError> {
    input::resolve(spec)?.into_sequence().map_err(|e| CliError::usage(format!("{}: {e}", spec.describe())))
}

fn elapsed_ms(start: Instant, output: &OutputArgs) -> Option<u64> {
    output.timings.then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX))
}

fn emit(text: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `stdout` unless `--out` redirects them.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match Cli::command().try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return stdout
                .write_all(e.render().to_string().as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source });
        }
        Err(e) => {
            let message = e.render().to_string();
            return Err(CliError::usage(message.strip_prefix("error: ").unwrap_or(&message).trim_end()));
        }
    };
    let cli = Cli::from_arg_matches(&matches).map_err(|e| CliError::usage(e.to_string()))?;
    let (_, sub) = matches.subcommand().expect("a subcommand is required");

    match cli.command {
        Command::Terms { seqs, n, output } => {
            let [spec] = exactly(ordered_specs(&seqs, sub), "terms")?;
            let values = input::resolve(&spec)?.terms(n);
            emit(&render::terms(&values, output.format), &output, stdout)
        }
        Command::Guess { file, terms, max_order, output } => {
            let data = match (file, terms) {
                (Some(path), _) => input::read_terms_file(&path)?,
                (None, Some(list)) => input::parse_rational_list(&list).map_err(CliError::usage)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            guess(&data, max_order, &output, stdout)
        }
        Command::Rec2gf { seqs, rec, init, output } => {
            let source = match (rec, init) {
                (Some(rec), Some(init)) => {
                    let coeffs = input::parse_rational_list(&rec).map_err(CliError::usage)?;
                    let initial = input::parse_rational_list(&init).map_err(CliError::usage)?;
                    let recurrence =
                        cfconv_core::Recurrence::new(coeffs).map_err(|e| CliError::usage(e.to_string()))?;
                    let s = cfconv_core::CFiniteSequence::new(recurrence, initial)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    exactly::<0>(ordered_specs(&seqs, sub), "rec2gf with --rec/--init")?;
                    Source::Sequence(s)
                }
                _ => {
                    let [spec] = exactly(ordered_specs(&seqs, sub), "rec2gf")?;
                    input::resolve(&spec)?
                }
            };
            emit(&render::gf(&source.to_gf(), output.format), &output, stdout)
        }
        Command::Gf2rec { seqs, output } => {
            let [spec] = exactly(ordered_specs(&seqs, sub), "gf2rec")?;
            let s = sequence_of(&spec)?;
            emit(&render::sequence(&s, output.format), &output, stdout)
        }
        Command::Selfconv { seqs, guard, output } => {
            let [spec] = exactly(ordered_specs(&seqs, sub), "selfconv")?;
            let conv = ConvolutionSpec::self_of(sequence_of(&spec)?).with_guard(guard);
            convolve(conv, &spec.describe(), &output, stdout)
        }
        Command::Crossconv { seqs, guard, output } => {
            let [a, b] = exactly(ordered_specs(&seqs, sub), "crossconv")?;
            let conv = ConvolutionSpec::cross(sequence_of(&a)?, sequence_of(&b)?).with_guard(guard);
            convolve(conv, &format!("{} {}", a.describe(), b.describe()), &output, stdout)
        }
        Command::TableSelf { table } => self::table(TableKind::SelfConvolution, "table-self", &table, stdout),
        Command::TableCross { table } => self::table(TableKind::Cross, "table-cross", &table, stdout),
    }
}

fn guess(
    data: &[Rational],
    max_order: Option<usize>,
    output: &OutputArgs,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let max_order = max_order.unwrap_or(data.len().saturating_sub(1) / 2);
    match guess_recurrence(data, max_order) {
        Ok(r) => emit(&render::guess(&r, output.format), output, stdout),
        Err(e @ GuessError::InsufficientData { .. }) => Err(CliError::usage(e.to_string())),
        Err(e @ GuessError::NotFound { max_order, terms }) => {
            emit(&render::not_found(max_order, terms, output.format), output, stdout)?;
            Err(CliError::NotFound(e))
        }
    }
}

fn convolve(spec: ConvolutionSpec, context: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let start = Instant::now();
    let result = derive_identity(&spec).map_err(|e| convolution_error(context, e))?;
    let ms = elapsed_ms(start, output);
    emit(&render::identity(&result, ms, output.format), output, stdout)
}

fn table(kind: TableKind, command: &str, args: &TableArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = run_table(kind, args.kmax, args.guard, args.jobs).map_err(|e| match e {
        BatchError::Entry { params, source } => convolution_error(format!("{command}: {}", params.label()), source),
        other => CliError::usage(format!("{command}: {other}")),
    })?;
    emit(&render::report(&report, args.output.timings, args.output.format), &args.output, stdout)
}
