//! Command implementations behind the `rrcodes` binary.
//!
//! Every command renders to a string so runs are reproducible and testable:
//! identical argv (including `--seed`) produce byte-identical output. JSON
//! is emitted with sorted keys; counts are printed as exact decimal
//! strings, never in scientific notation.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt;
use std::path::PathBuf;

use rrcodes::counting::{self, BoundedEq};
use rrcodes::divisors::{enumerate_family, CurveDescriptor, Family, FamilySpec};
use rrcodes::params;
use rrcodes::realize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    H,
    A,
    B,
    C,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::H => Family::H,
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TablePreset {
    /// The 70-row rate table: q=16, k=5, w=3, g=1, n=8..=14, s=1..n.
    Table3,
    /// Genus-1 closed forms for one family at given flags.
    Table2,
}

#[derive(Debug, Parser)]
#[command(name = "rrcodes", version, about = "Constant dimension subspace codes from Riemann-Roch spaces: parameters, counting, rate tables, and genus-0 verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the code parameters of a family as JSON.
    Params {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
        /// Weight bound; required for families B and C, rejected otherwise.
        #[arg(long)]
        w: Option<i64>,
    },
    /// Count solutions of x_1+...+x_n = s with lo <= x_i <= hi.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        lo: i64,
        #[arg(long)]
        hi: i64,
        /// Use the dynamic-programming oracle instead of the
        /// inclusion-exclusion formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Emit a rate table.
    Table {
        #[arg(long, value_enum)]
        preset: TablePreset,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Family for the table2 preset.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 16)]
        q: u32,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        w: Option<i64>,
    },
    /// Stream the divisors of a family, one JSON array per line.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        w: Option<i64>,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 0)]
        g: i64,
        /// Refuse families larger than this many divisors.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Realize a family over the genus-0 line (n = q+1 forced) and check
    /// the dimension, size, intersection, and distance laws.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        w: Option<i64>,
        /// All pairs are checked when the family is at most this large;
        /// above it a seeded deterministic sample is used.
        #[arg(long, default_value_t = 2000)]
        cap: u64,
        /// Seed for sampled verification.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Rendered output plus the process exit code.
pub struct Output {
    pub text: String,
    pub exit: i32,
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for CliError {}

impl From<rrcodes::divisors::FamilyError> for CliError {
    fn from(e: rrcodes::divisors::FamilyError) -> CliError {
        CliError(e.to_string())
    }
}

impl From<rrcodes::realize::RealizeError> for CliError {
    fn from(e: rrcodes::realize::RealizeError) -> CliError {
        CliError(e.to_string())
    }
}

fn canonical_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    // serde_json maps are BTree-backed, so converting through Value sorts
    // every object's keys.
    let v = serde_json::to_value(value).map_err(|e| CliError(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| CliError(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Params {
            family,
            q,
            n,
            g,
            k,
            s,
            w,
        } => {
            let spec = FamilySpec::new(
                Family::from(*family),
                CurveDescriptor::new(*q, *n, *g)?,
                *k,
                *s,
                *w,
            )?;
            let report = params::code_parameters(&spec);
            Ok(Output {
                text: canonical_json(&report)?,
                exit: 0,
            })
        }
        Command::Count { n, s, lo, hi, oracle } => {
            if *n < 1 {
                return Err(CliError("need at least one variable".into()));
            }
            if lo > hi {
                return Err(CliError(format!("empty range: lo = {lo} > hi = {hi}")));
            }
            let eq = BoundedEq::new(*n, *s, *lo, *hi);
            let count = if *oracle {
                counting::oracle_count(eq)
            } else {
                counting::count_u_shifted(eq)
            };
            Ok(Output {
                text: format!("{count}\n"),
                exit: 0,
            })
        }
        Command::Table {
            preset: TablePreset::Table3,
            format,
            family,
            ..
        } => {
            if family.is_some() {
                return Err(CliError("--family applies only to the table2 preset".into()));
            }
            let rows = params::table3();
            let text = match format {
                OutputFormat::Csv => params::table_csv(&rows),
                OutputFormat::Json => {
                    let objs: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "n": r.n,
                                "s": r.s,
                                "H": r.rate_h,
                                "A": r.rate_a,
                                "B": r.rate_b,
                                "C": r.rate_c,
                            })
                        })
                        .collect();
                    canonical_json(&objs)?
                }
            };
            Ok(Output { text, exit: 0 })
        }
        Command::Table {
            preset: TablePreset::Table2,
            format,
            family,
            q,
            n,
            k,
            s,
            w,
        } => {
            let family = family.ok_or(CliError("table2 requires --family".into()))?;
            let n = n.ok_or(CliError("table2 requires --n".into()))?;
            let k = k.ok_or(CliError("table2 requires --k".into()))?;
            let s = s.ok_or(CliError("table2 requires --s".into()))?;
            let row = params::table2_row(Family::from(family), *q, n, k, s, *w)?;
            let text = match format {
                OutputFormat::Csv => format!(
                    "family,lambda,rate,delta\n{},{},{},{}\n",
                    row.family,
                    params::format6(row.normalized_weight),
                    params::format6(row.rate),
                    params::format6(row.normalized_min_distance)
                ),
                OutputFormat::Json => canonical_json(&row)?,
            };
            Ok(Output { text, exit: 0 })
        }
        Command::Enumerate {
            family,
            n,
            s,
            w,
            k,
            q,
            g,
            cap,
        } => {
            let spec = FamilySpec::new(
                Family::from(*family),
                CurveDescriptor::new(*q, *n, *g)?,
                *k,
                *s,
                *w,
            )?;
            let size = counting::count_family(&spec);
            if size > (*cap).into() {
                return Err(CliError(format!(
                    "family has {size} divisors, above the cap {cap}; raise --cap to stream it"
                )));
            }
            let mut text = String::new();
            for d in enumerate_family(&spec) {
                text.push_str(&serde_json::to_string(&d).map_err(|e| CliError(e.to_string()))?);
                text.push('\n');
            }
            Ok(Output { text, exit: 0 })
        }
        Command::Verify {
            family,
            q,
            k,
            s,
            w,
            cap,
            seed,
        } => {
            let n = *q as usize + 1;
            let spec = FamilySpec::new(
                Family::from(*family),
                CurveDescriptor::new(*q, n, 0)?,
                *k,
                *s,
                *w,
            )?;
            let report = realize::verify(&spec, *cap, *seed)?;
            Ok(Output {
                text: canonical_json(&report)?,
                exit: if report.passed() { 0 } else { 1 },
            })
        }
    }
}
