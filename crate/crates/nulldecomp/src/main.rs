use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use nulldecomp::checks::{self, Kind};
use nulldecomp::formats::{export_dot, parse_edge_list, parse_graph6};
use nulldecomp::report::{build_report, ReportError};
use nulldecomp::{fixtures, oracle_limit};

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SHAPE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nulldecomp",
    version,
    about = "Null decomposition of trees and unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph and print a JSON report.
    Analyze {
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        /// Compare the formula values with the brute-force oracles.
        #[arg(long)]
        verify: bool,
        /// Also write a role-annotated Graphviz file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Input file; standard input when omitted.
        path: Option<PathBuf>,
    },
    /// Check the formulas against the oracles on a random corpus.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Replay the stored figure examples and diff against expectations.
    Fixtures {
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Print every compared field, not only differences.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Tree,
    Unicyclic,
    Cycle,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Tree => Kind::Tree,
            KindArg::Unicyclic => Kind::Unicyclic,
            KindArg::Cycle => Kind::Cycle,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            format,
            verify,
            dot,
            path,
        } => analyze(format, verify, dot, path),
        Command::Verify {
            kind,
            count,
            min_n,
            max_n,
            seed,
        } => verify(kind.into(), count, min_n, max_n, seed),
        Command::Fixtures { dir, all } => run_fixtures(dir, all),
    }
}

fn analyze(format: Format, verify: bool, dot: Option<PathBuf>, path: Option<PathBuf>) -> ExitCode {
    let (input, text) = match &path {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => (p.display().to_string(), t),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", p.display());
                return ExitCode::from(EXIT_PARSE);
            }
        },
        None => {
            let mut t = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut t) {
                eprintln!("error: cannot read standard input: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
            ("<stdin>".to_string(), t)
        }
    };
    let parsed = match format {
        Format::Edges => parse_edge_list(&text),
        Format::G6 => parse_graph6(&text),
    };
    let g = match parsed {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {input}: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };

    let limit = verify.then(oracle_limit);
    let report = match build_report(&input, &g, limit) {
        Ok(r) => r,
        Err(ReportError::Unsupported(shape)) => {
            eprintln!("error: {input}: {shape} graphs are not supported");
            return ExitCode::from(EXIT_SHAPE);
        }
        Err(e) => {
            eprintln!("error: {input}: {e}");
            return ExitCode::from(EXIT_MISMATCH);
        }
    };

    if let Some(dot_path) = dot {
        if let Err(e) = std::fs::write(&dot_path, export_dot(&g, Some(&report.roles))) {
            eprintln!("error: cannot write {}: {e}", dot_path.display());
            return ExitCode::from(EXIT_PARSE);
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports always serialize")
    );
    if let Some(v) = &report.verification {
        if let Some(reason) = &v.skipped {
            eprintln!("verification skipped: {reason}");
        }
        if v.mismatch {
            eprintln!("verification mismatch");
            return ExitCode::from(EXIT_MISMATCH);
        }
    }
    ExitCode::SUCCESS
}

fn verify(kind: Kind, count: usize, min_n: usize, max_n: usize, seed: u64) -> ExitCode {
    if min_n > max_n {
        eprintln!("error: --min-n {min_n} exceeds --max-n {max_n}");
        return ExitCode::from(EXIT_PARSE);
    }
    let limit = oracle_limit();
    if max_n > limit {
        eprintln!("error: --max-n {max_n} exceeds the oracle limit {limit} (set NULLDECOMP_MAX_N)");
        return ExitCode::from(EXIT_PARSE);
    }
    let start = Instant::now();
    let graphs = checks::corpus(kind, count, min_n..=max_n, seed);
    let summary = checks::run(kind, &graphs, limit);
    print!("{}", summary.render(10));
    if kind == Kind::Cycle {
        let orders: Vec<String> = checks::singular_orders(&graphs)
            .iter()
            .map(usize::to_string)
            .collect();
        println!("singular at n in {{{}}}", orders.join(", "));
    }
    eprintln!("{} instances in {:.2?}", graphs.len(), start.elapsed());
    if summary.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn run_fixtures(dir: Option<PathBuf>, all: bool) -> ExitCode {
    let dir = dir.unwrap_or_else(fixtures::default_dir);
    let results = match fixtures::run_all(&dir) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    for r in &results {
        let status = if r.ok() { "ok" } else { "FAIL" };
        println!("{:<10} {:>3} fields {status}", r.name, r.rows.len());
    }
    let failed = results.iter().any(|r| !r.ok());
    if failed || all {
        println!();
        print!("{}", fixtures::render_table(&results, all));
    }
    if failed {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}
