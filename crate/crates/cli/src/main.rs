//! `cgfib`: decompositions, golden-string queries, set enumeration and
//! verification checks from the command line.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check finds a
//! counterexample, 2 on any usage error.

mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use cgfib_core::oracle::{self, CheckParams, CHECKS};
use cgfib_core::sets::{Family, RowTable, SetFamily};
use cgfib_core::{cg_decompose, count_b, letter_at, zeckendorf, GoldenPrefix, Natural};
use clap::{Parser, Subcommand, ValueEnum};

use render::{OutputFormat, Renderer};

/// Most elements a single `set` invocation will print.
const MAX_SET_OUTPUT: usize = 10_000_000;
/// Longest golden-string prefix `golden prefix` will materialize.
const MAX_PREFIX: u64 = 100_000_000;
/// Most rows `table` will build.
const MAX_ROWS: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "cgfib",
    version,
    about = "Chung-Graham even-indexed Fibonacci numeration"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Upper bound (decimal; arbitrary precision where the command allows).
    #[arg(long, global = true)]
    limit: Option<String>,

    /// The k of A_2k and its ordered table.
    #[arg(long, global = true)]
    k: Option<u64>,

    /// The N of B_2N or Z(N).
    #[arg(long = "N", global = true)]
    big_n: Option<u64>,

    /// Number of rows (table) or row range (verify difference_law).
    #[arg(long, global = true)]
    rows: Option<u64>,

    /// Largest table level for the row-structure checks.
    #[arg(long, global = true)]
    ell: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum System {
    Cg,
    Zeck,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a non-negative integer.
    Decompose {
        n: String,
        #[arg(long, value_enum, default_value_t = System::Cg)]
        system: System,
    },
    /// List A_2k, B_2N or Z(N) up to --limit (or the first --count elements).
    Set {
        /// A, B or Z.
        family: Family,
        /// Fibonacci subscript: 2k for A, 2N for B, N for Z.
        parameter: u64,
        #[arg(long, conflicts_with = "limit")]
        count: Option<usize>,
    },
    /// Query the golden string.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
    /// Print rows q(1), q(2), ... of the ordered table of A_2k.
    Table,
    /// Run a verification check.
    Verify {
        /// Check name; `list` prints the registered checks.
        check: String,
    },
}

#[derive(Debug, Subcommand)]
enum GoldenAction {
    /// First L letters.
    Prefix { length: String },
    /// The j-th letter (1-based).
    Letter { position: String },
    /// Number of B's among the first n letters.
    Count { n: String },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<cgfib_core::Error> for Failure {
    fn from(e: cgfib_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_natural(what: &str, s: &str) -> Result<Natural, Failure> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Failure::Usage(format!(
            "{what} must be a non-negative decimal integer, got {s:?}"
        )));
    }
    s.parse::<Natural>()
        .map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn parse_bounded(what: &str, s: &str, bound: u64) -> Result<u64, Failure> {
    let v = parse_natural(what, s)?;
    match u64::try_from(&v) {
        Ok(v) if v <= bound => Ok(v),
        _ => Err(Failure::Usage(format!(
            "{what} = {s} exceeds the bound {bound}"
        ))),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let r = Renderer::new(cli.format);
    match cli.command {
        Command::Decompose { n, system } => {
            let n = parse_natural("n", &n)?;
            match system {
                System::Cg => r.cg(out, &n, &cg_decompose(&n))?,
                System::Zeck => r.zeck(out, &n, &zeckendorf(&n))?,
            }
        }
        Command::Set {
            family,
            parameter,
            count,
        } => {
            let set = SetFamily::new(family, parameter)?;
            let values = match (count, &cli.limit) {
                (Some(c), _) => {
                    if c > MAX_SET_OUTPUT {
                        return Err(Failure::Usage(format!("--count exceeds {MAX_SET_OUTPUT}")));
                    }
                    set.first(c)
                }
                (None, Some(limit)) => {
                    let limit = parse_natural("--limit", limit)?;
                    let mut values = Vec::new();
                    for v in set.iter().take_while(|v| *v <= limit) {
                        if values.len() == MAX_SET_OUTPUT {
                            return Err(Failure::Usage(format!(
                                "more than {MAX_SET_OUTPUT} elements below --limit"
                            )));
                        }
                        values.push(v);
                    }
                    values
                }
                (None, None) => return Err(Failure::Usage("set needs --limit or --count".into())),
            };
            r.set(out, &set, &values)?;
        }
        Command::Golden { action } => match action {
            GoldenAction::Prefix { length } => {
                let len = parse_bounded("length", &length, MAX_PREFIX)?;
                r.prefix(out, &GoldenPrefix::new(len as usize))?;
            }
            GoldenAction::Letter { position } => {
                let j = parse_natural("position", &position)?;
                let letter = letter_at(&j)?;
                r.letter(out, &j, letter)?;
            }
            GoldenAction::Count { n } => {
                let n = parse_natural("n", &n)?;
                r.count(out, &n, &count_b(&n))?;
            }
        },
        Command::Table => {
            let k = cli.k.unwrap_or(1);
            let rows = cli.rows.unwrap_or(13);
            if rows > MAX_ROWS {
                return Err(Failure::Usage(format!("--rows exceeds {MAX_ROWS}")));
            }
            let table = RowTable::new(k, rows as usize)?;
            r.table(out, &table)?;
        }
        Command::Verify { check } => {
            if check == "list" {
                for (name, about) in CHECKS {
                    writeln!(out, "{name:<22} {about}")?;
                }
                return Ok(0);
            }
            let params = CheckParams {
                limit: cli
                    .limit
                    .as_deref()
                    .map(|l| parse_bounded("--limit", l, u64::MAX))
                    .transpose()?,
                k: cli.k,
                big_n: cli.big_n,
                rows: cli.rows,
                ell: cli.ell,
            };
            let report = oracle::verify(&check, &params)?;
            r.report(out, &report)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
