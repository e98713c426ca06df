//! `hsop`: invariant rings of binary forms from the command line.
//!
//! Subcommands cover dimension counts and the dimension table, Poincaré
//! series, hsop numerators, the divisibility checker, the degree-3..8
//! classification (admissibility, minimality, exhaustive enumeration), an
//! empirical conjecture scanner, and the symbolic kernel (transvectants,
//! nullform detection, catalog invariants).
//!
//! Exit codes: 0 success, 2 usage error, 3 verdict-is-false under
//! `--assert`, 4 internal inconsistency. Output is byte-deterministic for
//! fixed inputs; worker counts never change bytes.

mod json;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hsop_core::classifier::{self, ClassifierError};
use hsop_core::combinatorics;
use hsop_core::conditions;
use hsop_core::forms::{self, catalog, Convention};
use hsop_core::sequence::parse_degree_list;
use hsop_core::series::{self, SeriesError};
use hsop_core::DegreeSequence;

#[derive(Parser)]
#[command(
    name = "hsop",
    version,
    about = "Invariant rings of binary forms: dimensions, Poincaré series, hsop degree sequences"
)]
struct Cli {
    /// Emit one JSON object per result line (integers as decimal strings)
    #[arg(long, global = true)]
    json: bool,

    /// Exit with code 3 when the computed verdict is false
    #[arg(long = "assert", global = true)]
    assert_verdict: bool,

    /// Worker threads for enumeration (default: available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of invariants (or covariants with --order) by Cayley-Sylvester
    Dims {
        /// Form degree n
        #[arg(long)]
        n: u32,
        /// Invariant degree m
        #[arg(long)]
        m: u32,
        /// Covariant order a (0 = invariants)
        #[arg(long, default_value_t = 0)]
        order: u64,
    },
    /// The h^n_m grid as TSV, zeros printed as "."
    Table {
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long = "m-max")]
        m_max: u32,
    },
    /// Poincaré series of the invariant ring, truncated
    Poincare {
        #[arg(long)]
        n: u32,
        /// Truncation order (inclusive)
        #[arg(long)]
        order: u32,
        /// Also print the machine-readable exp:coeff line
        #[arg(long)]
        machine: bool,
    },
    /// Numerator P(t)·prod(1-t^d) for a full candidate degree sequence
    Numerator {
        #[arg(long)]
        n: u32,
        /// Comma-separated degrees, e.g. 6,6,6,20
        #[arg(long)]
        degrees: String,
        #[arg(long)]
        machine: bool,
    },
    /// Divisibility conditions on a degree sequence
    Check {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degrees: String,
    },
    /// Full classification predicate for 3 <= n <= 8
    Admissible {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degrees: String,
    },
    /// Minimality: admissible with no additive reduction
    Minimal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        degrees: String,
    },
    /// All minimal degree sequences for n, by bounded exhaustive search
    Enumerate {
        #[arg(long, required_unless_present = "merge")]
        n: Option<u32>,
        /// Total shard count (with --shard: run one shard single-threaded)
        #[arg(long, requires = "shard")]
        shards: Option<usize>,
        /// Shard index to run (0-based)
        #[arg(long, requires = "shards")]
        shard: Option<usize>,
        /// Merge previously produced shard output files instead of searching
        #[arg(long, num_args = 1.., conflicts_with_all = ["shards", "shard"])]
        merge: Option<Vec<PathBuf>>,
    },
    /// Scan a degree window for numerator obstructions
    Scan {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lower: u64,
        #[arg(long)]
        upper: u64,
    },
    /// k-th transvectant of two forms (`n: c0,c1,...` syntax)
    Transvect {
        #[arg(long)]
        lhs: String,
        /// Defaults to --lhs (self-transvectant)
        #[arg(long)]
        rhs: Option<String>,
        #[arg(long)]
        k: u32,
        /// Read coefficients in the binomial convention
        #[arg(long)]
        binomial: bool,
    },
    /// Nullform test via exact maximal root multiplicity
    Nullform {
        #[arg(long)]
        form: String,
        #[arg(long)]
        binomial: bool,
    },
    /// Evaluate a catalog invariant chain on a form
    EvalInvariant {
        /// Chain name, e.g. n7.i12 (see --list)
        #[arg(long, required_unless_present = "list")]
        chain: Option<String>,
        #[arg(long, required_unless_present = "list")]
        form: Option<String>,
        #[arg(long)]
        binomial: bool,
        /// List the catalog for a form degree
        #[arg(long, value_name = "N", conflicts_with_all = ["chain", "form"])]
        list: Option<u32>,
    },
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<ClassifierError> for CliError {
    fn from(e: ClassifierError) -> Self {
        match e {
            ClassifierError::Series(inner) => inner.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::NotPolynomial(_) | SeriesError::WindowViolation { .. } => {
                CliError::Internal(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<forms::FormsError> for CliError {
    fn from(e: forms::FormsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<conditions::ConditionsError> for CliError {
    fn from(e: conditions::ConditionsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_degrees(text: &str) -> Result<Vec<u64>, CliError> {
    parse_degree_list(text).map_err(|e| CliError::Usage(e.to_string()))
}

fn convention(binomial: bool) -> Convention {
    if binomial {
        Convention::Binomial
    } else {
        Convention::Plain
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

/// Runs one command; returns the verdict consumed by `--assert`.
fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Dims { n, m, order } => {
            let dim = combinatorics::covariant_dim(*n, *m, *order);
            if cli.json {
                println!("{}", json::dims(*n, *m, *order, &dim));
            } else {
                println!("{dim}");
            }
            Ok(true)
        }
        Command::Table { n_max, m_max } => {
            if cli.json {
                for (row_idx, row) in combinatorics::dimension_table(*n_max, *m_max)
                    .iter()
                    .enumerate()
                {
                    println!("{}", json::table_row(row_idx as u32 + 1, row));
                }
            } else {
                print!("{}", combinatorics::dimension_table_tsv(*n_max, *m_max));
            }
            Ok(true)
        }
        Command::Poincare { n, order, machine } => {
            if *n < 1 {
                return Err(CliError::Usage("form degree must be at least 1".into()));
            }
            let p = series::poincare_series(*n, *order);
            if cli.json {
                println!("{}", json::poincare(*n, *order, &p));
            } else {
                println!("{p}");
                if *machine {
                    println!("{}", p.machine_line());
                }
            }
            Ok(true)
        }
        Command::Numerator {
            n,
            degrees,
            machine,
        } => {
            let degrees = parse_degrees(degrees)?;
            let numerator = series::hsop_numerator(*n, &degrees)?;
            let first_negative = numerator.first_negative();
            let palindromic = numerator.is_palindromic();
            if cli.json {
                println!(
                    "{}",
                    json::numerator(*n, &degrees, &numerator, palindromic, first_negative)
                );
            } else {
                println!("{numerator}");
                if *machine {
                    println!("{}", numerator.machine_line());
                }
                println!("palindromic: {palindromic}");
                if let Some(e) = first_negative {
                    println!("first negative exponent: {e}");
                }
            }
            Ok(first_negative.is_none())
        }
        Command::Check { n, degrees } => {
            let degrees = parse_degrees(degrees)?;
            let report = conditions::theorem1_check(*n, &degrees)?;
            if cli.json {
                println!("{}", json::check(&report, &degrees));
            } else {
                print!("{}", report.render());
                println!("{}", if report.passes() { "PASS" } else { "FAIL" });
            }
            Ok(report.passes())
        }
        Command::Admissible { n, degrees } => {
            let degrees = parse_degrees(degrees)?;
            let report = classifier::admissible(*n, &degrees)?;
            if cli.json {
                println!("{}", json::admissible(&report));
            } else if report.verdict() {
                println!("admissible");
            } else {
                println!("not admissible");
                for v in &report.violations {
                    println!(
                        "  {}: {} (witnesses {:?})",
                        v.rule, v.description, v.witnesses
                    );
                }
            }
            Ok(report.verdict())
        }
        Command::Minimal { n, degrees } => {
            let degrees = parse_degrees(degrees)?;
            let admissible = classifier::is_admissible(*n, &degrees)?;
            let reduction = if admissible {
                classifier::find_reduction(*n, &degrees)?
            } else {
                None
            };
            let minimal = admissible && reduction.is_none();
            if cli.json {
                println!(
                    "{}",
                    json::minimal(*n, &degrees, admissible, minimal, reduction.as_ref())
                );
            } else {
                println!("admissible: {admissible}");
                println!("minimal: {minimal}");
                if let Some(w) = &reduction {
                    println!(
                        "reduction: {} = {} + {} -> {:?} and {:?}",
                        w.entry, w.split.0, w.split.1, w.left, w.right
                    );
                }
            }
            Ok(minimal)
        }
        Command::Enumerate {
            n,
            shards,
            shard,
            merge,
        } => {
            let sequences = if let Some(files) = merge {
                merge_files(*n, files)?
            } else {
                let n = n.expect("clap guarantees n without --merge");
                match (shards, shard) {
                    (Some(total), Some(index)) => {
                        let plan = classifier::shard_plan(n, *total)?;
                        let spec = plan.get(*index).ok_or_else(|| {
                            CliError::Usage(format!("shard index {index} out of range 0..{total}"))
                        })?;
                        classifier::run_shard(spec)?
                    }
                    _ => {
                        let workers = cli.workers.unwrap_or_else(default_workers);
                        classifier::enumerate_minimal_parallel(n, workers)?
                    }
                }
            };
            for seq in &sequences {
                if cli.json {
                    println!("{}", json::sequence_line(seq));
                } else {
                    println!("{seq}");
                }
            }
            Ok(true)
        }
        Command::Scan { n, lower, upper } => {
            let report = classifier::conjecture_scan(*n, *lower, *upper)?;
            if cli.json {
                println!("{}", json::scan(&report));
            } else {
                println!("passing: {}", report.passing);
                for o in &report.obstructions {
                    let seq: Vec<String> = o.degrees.iter().map(u64::to_string).collect();
                    println!(
                        "obstruction: {} first_negative={}",
                        seq.join(","),
                        o.first_negative
                    );
                }
                println!("obstructions: {}", report.obstructions.len());
            }
            Ok(report.obstructions.is_empty())
        }
        Command::Transvect {
            lhs,
            rhs,
            k,
            binomial,
        } => {
            let conv = convention(*binomial);
            let g = forms::parse_form(lhs, conv)?;
            let h = match rhs {
                Some(text) => forms::parse_form(text, conv)?,
                None => g.clone(),
            };
            let result = g.transvectant(&h, *k)?;
            if cli.json {
                println!("{}", json::transvect(*k, &result));
            } else {
                println!("{result}");
                println!("{}", result.to_input_syntax());
            }
            Ok(true)
        }
        Command::Nullform { form, binomial } => {
            let f = forms::parse_form(form, convention(*binomial))?;
            let multiplicity = f.max_root_multiplicity()?;
            let nullform = f.is_nullform()?;
            if cli.json {
                println!("{}", json::nullform(f.degree(), multiplicity, nullform));
            } else {
                println!("max multiplicity: {multiplicity}");
                println!("nullform: {nullform}");
            }
            Ok(nullform)
        }
        Command::EvalInvariant {
            chain,
            form,
            binomial,
            list,
        } => {
            if let Some(n) = list {
                for (name, degree, order) in catalog::describe(*n) {
                    if cli.json {
                        println!("{}", json::catalog_entry(&name, degree, order));
                    } else {
                        println!("{name}\tdegree {degree}\torder {order}");
                    }
                }
                return Ok(true);
            }
            let name = chain
                .as_deref()
                .expect("clap requires chain without --list");
            let entry = catalog::find(name)
                .ok_or_else(|| CliError::Usage(format!("unknown catalog chain {name:?}")))?;
            let f = forms::parse_form(
                form.as_deref().expect("clap requires form without --list"),
                convention(*binomial),
            )?;
            if f.degree() != entry.n {
                return Err(CliError::Usage(format!(
                    "chain {} expects a degree-{} form, got degree {}",
                    entry.name,
                    entry.n,
                    f.degree()
                )));
            }
            let value = entry.chain.evaluate(&f)?;
            if cli.json {
                println!("{}", json::eval_invariant(&entry, &value));
            } else if let Some(scalar) = value.scalar_value() {
                println!("{scalar}");
            } else {
                println!("{value}");
                println!("{}", value.to_input_syntax());
            }
            Ok(true)
        }
    }
}

fn merge_files(n: Option<u32>, files: &[PathBuf]) -> Result<Vec<DegreeSequence>, CliError> {
    let mut all = Vec::new();
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let degrees = parse_degrees(line)?;
            let seq = DegreeSequence::new(n.unwrap_or(0), degrees)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(n) = n {
                if !seq.is_full_length() {
                    return Err(CliError::Usage(format!(
                        "sequence {seq} has wrong length for n={n}"
                    )));
                }
            }
            all.push(seq);
        }
    }
    Ok(classifier::merge_shards([all]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let cache_dir = std::env::var_os("HSOP_CACHE_DIR").map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        let _ = hsop_core::cache::load_from_dir(dir);
    }

    let code = match run(&cli) {
        Ok(verdict) => {
            if cli.assert_verdict && !verdict {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(4)
        }
    };

    if let Some(dir) = &cache_dir {
        // persistence is best effort; failures never affect results
        let _ = hsop_core::cache::save_to_dir(dir);
    }
    code
}
