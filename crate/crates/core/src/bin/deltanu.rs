use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use deltanu::periodicity::evaluate_range;
use deltanu::{
    compute_bounds, factorizations, length_set, minimal_period_report_with, w_set, Error,
    Evaluator, NumericalSemigroup, PeriodOptions, ScanFilter,
};

#[derive(Parser)]
#[command(
    name = "deltanu",
    version,
    about = "Length-set invariants of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SemigroupArg {
    /// Comma-separated generators, e.g. 4,9,10,15
    #[arg(short = 's', long = "semigroup")]
    semigroup: String,
}

impl SemigroupArg {
    fn parse(&self) -> Result<NumericalSemigroup, Error> {
        self.semigroup.parse()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact bound profile (d, N_S, lambda1, lambda2, N0, ...)
    Bounds(SemigroupArg),
    /// delta_nu(n) for one n
    Dnu {
        #[command(flatten)]
        sg: SemigroupArg,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, conflicts_with_all = ["fast", "check"])]
        naive: bool,
        #[arg(long, conflicts_with = "check")]
        fast: bool,
        /// Run both algorithms and fail on disagreement
        #[arg(long)]
        check: bool,
    },
    /// delta_nu(n) for n = 0..=TO
    Table {
        #[command(flatten)]
        sg: SemigroupArg,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Period, pre-period and residue table of delta_nu
    Period {
        #[command(flatten)]
        sg: SemigroupArg,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        naive: bool,
        /// Accept TO below N0 + 2*delta
        #[arg(long)]
        allow_small_window: bool,
    },
    /// Factorizations and length set of one element
    Zset {
        #[command(flatten)]
        sg: SemigroupArg,
        #[arg(long)]
        element: u64,
    },
    /// W(n): elements with a factorization of length n
    Wset {
        #[command(flatten)]
        sg: SemigroupArg,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long)]
        count_only: bool,
    },
    /// Walk the semigroup tree by genus and report each delta_nu period
    Scan {
        #[arg(long)]
        max_genus: u64,
        #[arg(long)]
        keep_arithmetic: bool,
        #[arg(long)]
        nonconstant_only: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    OverBudget,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn emit(out: &mut impl Write, v: &impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn budget_from_env() -> Option<Duration> {
    std::env::var("DELTANU_BUDGET_MS")
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .map(Duration::from_millis)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Bounds(sg) => {
            let sg = sg.parse()?;
            emit(&mut out, &compute_bounds(&sg)?)?;
        }
        Command::Dnu {
            sg,
            n,
            naive,
            fast,
            check,
        } => {
            let sg = sg.parse()?;
            let rec = if naive {
                Evaluator::with_naive_capacity(&sg, n).naive(n)?
            } else if check {
                Evaluator::new(&sg).check(n)?
            } else if fast {
                Evaluator::new(&sg).fast(n)?
            } else {
                let ev = Evaluator::new(&sg);
                if ev.has_fast_path() {
                    ev.fast(n)?
                } else {
                    Evaluator::with_naive_capacity(&sg, n).naive(n)?
                }
            };
            emit(&mut out, &rec)?;
        }
        Command::Table {
            sg,
            to,
            jobs,
            format,
        } => {
            let sg = sg.parse()?;
            let ev = if sg.embedding_dimension() >= 3 {
                Evaluator::new(&sg)
            } else {
                Evaluator::with_naive_capacity(&sg, to)
            };
            let recs = evaluate_range(&ev, to, false, jobs)?;
            match format {
                Format::Json => {
                    for r in &recs {
                        emit(&mut out, r)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "n,delta_nu,method,evaluated_elements")?;
                    for r in &recs {
                        let dnu: Vec<String> = r.delta_nu.iter().map(u64::to_string).collect();
                        let method = match r.method {
                            deltanu::Method::Fast => "fast",
                            deltanu::Method::Naive => "naive",
                        };
                        writeln!(
                            out,
                            "{},{},{},{}",
                            r.n,
                            dnu.join("|"),
                            method,
                            r.evaluated_elements
                        )?;
                    }
                }
            }
        }
        Command::Period {
            sg,
            to,
            jobs,
            naive,
            allow_small_window,
        } => {
            let sg = sg.parse()?;
            let opts = PeriodOptions {
                naive_only: naive,
                jobs,
                allow_small_window,
            };
            emit(&mut out, &minimal_period_report_with(&sg, to, opts)?)?;
        }
        Command::Zset { sg, element } => {
            let sg = sg.parse()?;
            let fs = factorizations(&sg, element);
            let zs: Vec<&[u64]> = fs.iter().map(|f| f.coordinates()).collect();
            let ls = length_set(&sg, element);
            emit(
                &mut out,
                &json!({
                    "element": element,
                    "factorizations": zs,
                    "lengths": ls.lengths,
                    "delta": ls.lengths.gaps(),
                }),
            )?;
        }
        Command::Wset { sg, n, count_only } => {
            let sg = sg.parse()?;
            let w = w_set(&sg, n);
            if count_only {
                emit(&mut out, &json!({ "n": n, "count": w.len() }))?;
            } else {
                emit(
                    &mut out,
                    &json!({ "n": n, "count": w.len(), "elements": w }),
                )?;
            }
        }
        Command::Scan {
            max_genus,
            keep_arithmetic,
            nonconstant_only,
            jobs,
        } => {
            let filter = ScanFilter {
                max_genus,
                skip_generalized_arithmetic: !keep_arithmetic,
                require_nonconstant: nonconstant_only,
            };
            let recs = deltanu::genus_tree_scan(&filter, jobs, budget_from_env());
            let mut truncated = false;
            for r in &recs {
                truncated |= r.truncated;
                emit(&mut out, r)?;
            }
            out.flush()?;
            if truncated {
                return Err(Failure::OverBudget);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Mismatch { .. } => 3,
                Error::OverBudget(_) => 4,
                _ => 2,
            })
        }
        Err(Failure::OverBudget) => {
            eprintln!("error: some semigroups exceeded DELTANU_BUDGET_MS and were truncated");
            ExitCode::from(4)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
