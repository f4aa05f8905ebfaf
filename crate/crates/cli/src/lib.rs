//! Argument parsing and command execution for the `syt3` binary.

pub mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use syt3_core::engine::{self, count_three_row, motzkin_numbers};
use syt3_core::series::{catalan_series, motzkin_series, PsiSeries, TruncatedSeries};
use syt3_core::verify::{run_suite, Suite};
use syt3_core::{oracle_total, BigInt, Partition};

pub use output::{CheckRecord, Format, OutputRecord, Payload};

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "syt3",
    version,
    about = "Counts skew standard Young tableaux with at most three rows via Motzkin numbers"
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Truncation order for `series`, degree bound for `verify`.
    #[arg(long, global = true)]
    pub order: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Total number of standard tableaux of shape λ/μ over all λ ⊢ n with at most three rows.
    ///
    /// n is |λ|; the tableaux hold the entries 1..n−|μ|.
    Count(CountArgs),
    /// Brute-force tableau total, summing over outer shapes with a row bound.
    Oracle(OracleArgs),
    /// Coefficient tables and count grids.
    Table(TableArgs),
    /// Coefficients of a generating function.
    Series(SeriesArgs),
    /// Runs identity checks and reports each one.
    Verify(VerifyArgs),
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Size of the outer shapes, |λ|.
    #[arg(long)]
    pub n: usize,
    /// Inner shape as comma-separated parts; empty or omitted means ∅.
    #[arg(long, value_parser = parse_partition, default_value = "")]
    pub mu: Partition,
    /// Count by brute force instead of the Motzkin formula.
    #[arg(long, conflicts_with = "cross_check")]
    pub use_oracle: bool,
    /// Run both and exit with status 1 if they disagree.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    pub mu: Partition,
    #[arg(long, default_value_t = 3)]
    pub max_rows: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Coefficients r_{k,i} of r_k(x).
    Rki,
    /// count(n, μ) for n up to --nmax.
    Counts,
    /// Motzkin numbers M_0..M_n.
    Motzkin,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Last row k for `rki`.
    #[arg(long, default_value_t = 8)]
    pub kmax: usize,
    /// Last index for `motzkin`.
    #[arg(long, default_value_t = 20)]
    pub n: usize,
    /// Largest |λ| for `counts`.
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    /// Inner shapes for `counts` (repeatable); defaults to ∅.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Vec<Partition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Motzkin,
    Catalan,
    /// α_k.
    #[value(name = "psi-hg")]
    PsiHg,
    /// β_k.
    #[value(name = "psi-hf")]
    PsiHf,
    /// One-row count series Ψ(G₃(k−1, 0)).
    #[value(name = "psi-G3")]
    PsiG3,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(value_enum)]
    pub name: SeriesName,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Series,
    Chebyshev,
    Theorems,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Series => Suite::Series,
            SuiteArg::Chebyshev => Suite::Chebyshev,
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    pub suite: SuiteArg,
}

pub const DEFAULT_SERIES_ORDER: usize = 10;
pub const DEFAULT_VERIFY_ORDER: usize = 25;

/// A finished command: the record to print and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    pub code: i32,
}

impl Outcome {
    fn ok(record: OutputRecord) -> Self {
        Self {
            record,
            code: EXIT_OK,
        }
    }
}

/// Runs a parsed command. `Err` carries a usage-level message (exit code 2).
pub fn execute(cli: &Cli) -> Result<Outcome, String> {
    let order = cli.order;
    match &cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Table(args) => cmd_table(args),
        Command::Series(args) => cmd_series(args, order.unwrap_or(DEFAULT_SERIES_ORDER)),
        Command::Verify(args) => cmd_verify(args, order.unwrap_or(DEFAULT_VERIFY_ORDER)),
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

pub fn cmd_count(args: &CountArgs) -> Result<Outcome, String> {
    let n = args.n;
    let mu = &args.mu;
    let base = |method: &str, value: &BigInt| {
        OutputRecord::new("count", Payload::Value(value.to_string()))
            .param("n", n)
            .param("mu", mu)
            .param("entries", n.saturating_sub(mu.size()))
            .param("method", method)
    };
    if mu.len() > 3 {
        return Err(err(syt3_core::Error::TooManyRows { rows: mu.len() }));
    }
    if args.use_oracle {
        let total = BigInt::from(oracle_total(n, mu, 3).map_err(err)?);
        return Ok(Outcome::ok(base("oracle", &total)));
    }
    let formula = count_three_row(n, mu).map_err(err)?;
    if args.cross_check {
        let oracle = BigInt::from(oracle_total(n, mu, 3).map_err(err)?);
        let agree = oracle == formula;
        let mut record = base("cross-check", &formula).verified(agree);
        if !agree {
            record = record.param("oracle", &oracle);
        }
        return Ok(Outcome {
            record,
            code: if agree { EXIT_OK } else { EXIT_MISMATCH },
        });
    }
    Ok(Outcome::ok(base("formula", &formula)))
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, String> {
    if args.max_rows == 0 {
        return Err("--max-rows must be positive".into());
    }
    let total = oracle_total(args.n, &args.mu, args.max_rows).map_err(err)?;
    Ok(Outcome::ok(
        OutputRecord::new("oracle", Payload::Value(total.to_string()))
            .param("n", args.n)
            .param("mu", &args.mu)
            .param("max_rows", args.max_rows),
    ))
}

pub fn cmd_table(args: &TableArgs) -> Result<Outcome, String> {
    let record = match args.kind {
        TableKind::Rki => {
            if args.kmax == 0 {
                return Err("--kmax must be positive".into());
            }
            let table = engine::coefficient_table(args.kmax);
            let mut columns = vec!["k".to_owned()];
            columns.extend((0..args.kmax.max(1)).map(|i| i.to_string()));
            let rows = table
                .iter()
                .enumerate()
                .map(|(k, row)| {
                    std::iter::once(k.to_string())
                        .chain(row.iter().map(ToString::to_string))
                        .collect()
                })
                .collect();
            OutputRecord::new("table", Payload::Table { columns, rows })
                .param("kind", "rki")
                .param("kmax", args.kmax)
        }
        TableKind::Motzkin => {
            let values = motzkin_numbers(args.n).map_err(err)?;
            let rows = values
                .iter()
                .enumerate()
                .map(|(n, m)| vec![n.to_string(), m.to_string()])
                .collect();
            OutputRecord::new(
                "table",
                Payload::Table {
                    columns: vec!["n".into(), "M_n".into()],
                    rows,
                },
            )
            .param("kind", "motzkin")
            .param("n", args.n)
        }
        TableKind::Counts => {
            let shapes = if args.mu.is_empty() {
                vec![Partition::empty()]
            } else {
                args.mu.clone()
            };
            let mut rows = Vec::new();
            for mu in &shapes {
                for n in mu.size()..=args.nmax {
                    let count = count_three_row(n, mu).map_err(err)?;
                    rows.push(vec![mu.to_string(), n.to_string(), count.to_string()]);
                }
            }
            let mu_list: Vec<String> = shapes.iter().map(|m| format!("({m})")).collect();
            OutputRecord::new(
                "table",
                Payload::Table {
                    columns: vec!["mu".into(), "n".into(), "count".into()],
                    rows,
                },
            )
            .param("kind", "counts")
            .param("nmax", args.nmax)
            .param("mu", mu_list.join(" "))
        }
    };
    Ok(Outcome::ok(record))
}

pub fn cmd_series(args: &SeriesArgs, order: usize) -> Result<Outcome, String> {
    let k = args.k;
    let series: TruncatedSeries = match args.name {
        SeriesName::Motzkin => motzkin_series(order).map_err(err)?,
        SeriesName::Catalan => catalan_series(order).map_err(err)?,
        SeriesName::PsiHg => PsiSeries::new(order).and_then(|p| p.alpha(k)).map_err(err)?,
        SeriesName::PsiHf => PsiSeries::new(order).and_then(|p| p.beta(k)).map_err(err)?,
        SeriesName::PsiG3 => PsiSeries::new(order).and_then(|p| p.g3_one_row(k)).map_err(err)?,
    };
    let name = args.name.to_possible_value().expect("no skipped variants");
    let coefficients = series.coefficients().iter().map(ToString::to_string).collect();
    let mut record = OutputRecord::new(
        "series",
        Payload::Series {
            order,
            coefficients,
        },
    )
    .param("name", name.get_name())
    .param("order", order);
    if matches!(args.name, SeriesName::PsiHg | SeriesName::PsiHf | SeriesName::PsiG3) {
        record = record.param("k", k);
    }
    Ok(Outcome::ok(record))
}

pub fn cmd_verify(args: &VerifyArgs, order: usize) -> Result<Outcome, String> {
    if order == 0 {
        return Err("--order must be at least 1".into());
    }
    let suite: Suite = args.suite.into();
    let checks = run_suite(suite, order);
    let all_passed = checks.iter().all(|c| c.passed);
    let records = checks
        .into_iter()
        .map(|c| CheckRecord {
            suite: c.suite.to_string(),
            name: c.name,
            passed: c.passed,
            elapsed_us: c.elapsed.as_micros().to_string(),
            detail: c.detail,
        })
        .collect();
    Ok(Outcome {
        record: OutputRecord::new("verify", Payload::Checks(records))
            .param("suite", suite)
            .param("order", order)
            .verified(all_passed),
        code: if all_passed { EXIT_OK } else { EXIT_MISMATCH },
    })
}
