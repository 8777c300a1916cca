use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covering_cycles::{catalog, ErrorKind, MultiGraph};

mod run;

#[derive(Parser, Debug)]
#[command(
    name = "covcycles",
    version,
    about = "Exact counts of edge-covering cycles in multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Graph file (`directed 0|1`, `vertices n`, then `edge u v` lines)
    #[arg(short = 'g', long = "graph", global = true, conflicts_with = "builtin")]
    graph: Option<PathBuf>,

    /// Built-in graph: rose:R, theta, cycle:n, dircycle:n, dircomplete:n
    #[arg(long, global = true)]
    builtin: Option<String>,

    /// Cycle length or inclusive range, e.g. `4` or `1..10`
    #[arg(short = 'N', long = "length", global = true, value_parser = parse_range)]
    length: Option<RangeInclusive<usize>>,

    /// Truncation order for series (default 2|E| + 4)
    #[arg(long, global = true)]
    order: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = SignArg::Both)]
    sign: SignArg,

    /// Route used by `series`
    #[arg(long, global = true, value_enum, default_value_t = Route::Exp)]
    route: Route,

    /// Largest edge (or vertex) count for subset enumeration
    #[arg(long, global = true, default_value_t = covering_cycles::census::DEFAULT_SUBSET_LIMIT)]
    subset_limit: usize,

    /// Largest number of partial walks the brute-force oracle may visit
    #[arg(long, global = true, default_value_t = covering_cycles::oracle::DEFAULT_CAP)]
    oracle_cap: u128,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// omega(N) and Theta(N) over a length range
    Census,
    /// Euler cycle count, or the Hamiltonian report for directed graphs
    Euler,
    /// d_± coefficients through the truncation order
    Series,
    /// Three-route agreement plus every coefficient identity
    Verify,
    /// Brute-force counts next to the matrix route
    Oracle,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SignArg {
    Plus,
    Minus,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    Exp,
    Partition,
    Determinant,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid length `{t}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('=').trim())?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn load_graph(cli: &Cli) -> covering_cycles::Result<MultiGraph> {
    match (&cli.graph, &cli.builtin) {
        (Some(path), _) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| covering_cycles::Error::Parse {
                    line: 0,
                    message: format!("cannot read {}: {e}", path.display()),
                })?;
            text.parse()
        }
        (None, Some(name)) => catalog::builtin(name),
        (None, None) => Err(covering_cycles::Error::Parse {
            line: 0,
            message: "no graph given; use -g PATH or --builtin NAME".into(),
        }),
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Parse => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Consistency => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let graph = match load_graph(&cli) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(e.kind()));
        }
    };
    match run::run(&cli, &graph) {
        Ok(output) => {
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", output.text);
            if output.consistent {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: internal consistency check failed");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
