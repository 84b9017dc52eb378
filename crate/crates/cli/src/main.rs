//! `mlt`: generate, check and solve matroidal Latin squares, and scan
//! instance families for small independent transversals.
//!
//! Exit codes: 0 ok, 1 usage or parse error, 2 validation failure,
//! 3 theorem-violation anomaly.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mlt_core::harness::format::InstanceFile;
use mlt_core::harness::generate::{generate, GenKind};
use mlt_core::harness::scan::{scan, ScanConfig, ScanReport, Selection};
use mlt_core::harness::SolveSummary;
use mlt_core::lemma1::SetFamily;
use mlt_core::transversal::{exact_max, greedy_solve, two_thirds_solve, DEFAULT_NODE_BUDGET};
use mlt_core::{Error, ErrorKind, Mls};
use serde::Serialize;

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_ANOMALY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mlt",
    version,
    about = "Matroidal Latin square transversal toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance file
    Gen(GenArgs),
    /// Check that an instance file is a matroidal Latin square
    Check(CheckArgs),
    /// Find an independent partial transversal
    Solve(SolveArgs),
    /// Solve a family of instances exactly and report the smallest optimum
    Scan(ScanArgs),
    /// Decompose a set family and look for a covered subset
    Lemma1(Lemma1Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Theorem2,
    Latin,
    Embed,
}

impl From<Kind> for GenKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Theorem2 => GenKind::Theorem2,
            Kind::Latin => GenKind::Latin,
            Kind::Embed => GenKind::Embed,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Prime modulus (theorem2 and embed)
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, env = "MLT_SEED", default_value_t = 0)]
    seed: u64,
    /// Output path; standard output if omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    Exact,
    Greedy,
    Augment,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    method: SolveMethod,
    /// Node budget for the exact search; 0 means unbounded
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Scan-order seed for the greedy method
    #[arg(long, env = "MLT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "latin")]
    generator: Kind,
    /// Every Latin square of order n (n <= 5)
    #[arg(long, conflicts_with = "count")]
    all: bool,
    /// Number of random instances
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, env = "MLT_SEED", default_value_t = 0)]
    seed: u64,
    /// Primes for theorem2 and embed instances
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    p: Vec<u64>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Directory for candidate instance files
    #[arg(long, default_value = "scan-candidates")]
    dump_dir: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Lemma1Args {
    /// Size m of the ground set X = {1..m}
    #[arg(long)]
    x: u32,
    /// A subset as comma-separated elements; repeat for each subset
    #[arg(long = "subset")]
    subsets: Vec<String>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Check(args) => run_check(args),
        Command::Solve(args) => run_solve(args),
        Command::Scan(args) => run_scan(args),
        Command::Lemma1(args) => run_lemma1(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Validation => EXIT_VALIDATION,
                ErrorKind::Anomaly => EXIT_ANOMALY,
                ErrorKind::Input | ErrorKind::Contract | ErrorKind::Domain => EXIT_USAGE,
            })
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn load(path: &PathBuf) -> Result<Mls, Error> {
    let text = fs::read_to_string(path)?;
    InstanceFile::parse(&text)?.to_mls()
}

fn run_gen(args: GenArgs) -> Result<ExitCode, Error> {
    let mls = generate(args.kind.into(), args.n, args.p, args.seed)?;
    let text = InstanceFile::from_mls(&mls).to_text();
    match args.output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckOutput {
    n: usize,
    valid: bool,
    violations: Vec<String>,
}

fn run_check(args: CheckArgs) -> Result<ExitCode, Error> {
    let mls = load(&args.file)?;
    let violations: Vec<String> = mls.validate().iter().map(ToString::to_string).collect();
    let out = CheckOutput {
        n: mls.n(),
        valid: violations.is_empty(),
        violations,
    };
    if args.json {
        print_json(&out);
    } else if out.valid {
        println!("ok: matroidal Latin square of degree {}", out.n);
    } else {
        for v in &out.violations {
            println!("violation: {v}");
        }
    }
    Ok(if out.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VALIDATION)
    })
}

fn run_solve(args: SolveArgs) -> Result<ExitCode, Error> {
    let mls = load(&args.file)?.validated()?;
    let report = match args.method {
        SolveMethod::Exact => exact_max(&mls, args.budget),
        SolveMethod::Greedy => greedy_solve(&mls, args.seed),
        SolveMethod::Augment => two_thirds_solve(&mls)?,
    };
    let summary = SolveSummary::new(&mls, &report);
    if args.json {
        print_json(&summary);
    } else {
        println!("{:<10} {}", "method", summary.method);
        println!("{:<10} {}", "n", summary.n);
        println!("{:<10} {}", "size", summary.size);
        println!("{:<10} {}", "bound", summary.two_thirds_bound);
        let cells: Vec<String> = summary
            .cells
            .iter()
            .map(|(r, c)| format!("({r},{c})"))
            .collect();
        println!("{:<10} {}", "cells", cells.join(" "));
        println!("{:<10} {}", "optimal", summary.optimal);
        println!("{:<10} {}", "nodes", summary.nodes);
        println!("{:<10} {}", "anomaly", summary.anomaly);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_scan_table(report: &ScanReport) {
    println!(
        "generator {}  n {}  prng {}  seed {}  instances {}",
        report.generator, report.n, report.prng, report.seed, report.instance_count
    );
    match report.minimum {
        Some(min) => println!(
            "minimum maximum {min}  (n-1 = {}, ceil(2n/3) = {})",
            report.conjectured_bound, report.two_thirds_bound
        ),
        None => println!("no instances"),
    }
    if report.instance_count <= 50 {
        println!(
            "{:>6}  {:>5}  {:>7}  {:>9}  source",
            "index", "exact", "optimal", "heuristic"
        );
        for r in &report.instances {
            println!(
                "{:>6}  {:>5}  {:>7}  {:>9}  {}",
                r.index, r.exact, r.optimal, r.heuristic, r.source
            );
        }
    }
    for c in &report.candidates {
        println!(
            "candidate {}: verified maximum {}{}  {}",
            c.index,
            c.verified_max,
            if c.below_two_thirds {
                " (below ceil(2n/3))"
            } else {
                ""
            },
            c.file.as_deref().unwrap_or("-")
        );
    }
}

fn run_scan(args: ScanArgs) -> Result<ExitCode, Error> {
    let config = ScanConfig {
        n: args.n,
        generator: args.generator.into(),
        selection: if args.all {
            Selection::All
        } else {
            Selection::Count(args.count)
        },
        seed: args.seed,
        primes: args.p,
        node_budget: args.budget,
        dump_dir: Some(args.dump_dir),
    };
    let report = scan(&config)?;
    if args.json {
        print_json(&report);
    } else {
        print_scan_table(&report);
    }
    Ok(if report.contradicts_two_thirds() {
        ExitCode::from(EXIT_ANOMALY)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct Lemma1Output {
    x: BTreeSet<u32>,
    subsets: Vec<BTreeSet<u32>>,
    once: BTreeSet<u32>,
    repeated: BTreeSet<u32>,
    covered_subset: Option<usize>,
}

fn run_lemma1(args: Lemma1Args) -> Result<ExitCode, Error> {
    let universe: BTreeSet<u32> = (1..=args.x).collect();
    let subsets = args
        .subsets
        .iter()
        .map(|raw| {
            raw.split(',')
                .map(str::trim)
                .filter(|item| !item.is_empty())
                .map(|item| {
                    item.parse::<u32>()
                        .map_err(|_| Error::Format(format!("bad subset element {item:?}")))
                })
                .collect::<Result<BTreeSet<u32>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let family = SetFamily::new(universe, subsets)?;
    let covered = family.find_covered_subset()?;
    let d = family.decompose();
    let out = Lemma1Output {
        x: family.universe().clone(),
        subsets: family.subsets().to_vec(),
        once: d.once,
        repeated: d.repeated,
        covered_subset: covered,
    };
    if args.json {
        print_json(&out);
    } else {
        println!("once      {:?}", out.once);
        println!("repeated  {:?}", out.repeated);
        match out.covered_subset {
            Some(i) => println!("covered   subset {i} {:?}", out.subsets[i]),
            None => println!("covered   none"),
        }
    }
    Ok(ExitCode::SUCCESS)
}
