//! `peribrauer`: batch computation, verification and rendering on top of the
//! `peribrauer` library.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use peribrauer::exec::with_workers;
use peribrauer::partitions::Partition;
use peribrauer::skew::SkewDiagram;

const WORKERS_ENV: &str = "PERIBRAUER_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "peribrauer",
    version,
    about = "Skew diagrams, rim-hook coverings and decomposition numbers"
)]
struct Cli {
    /// Worker threads for the exhaustive sweeps; 1 runs sequentially.
    /// PERIBRAUER_WORKERS overrides this value.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Flavor {
    /// Diagrams whose covering hooks all satisfy HW and D.
    Gamma,
    /// Closure of the empty diagram under P and E.
    Upsilon,
    /// Closure of the empty diagram under the barred operators.
    UpsilonBar,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership in Gamma and print the covering.
    Gamma {
        /// Diagram in row syntax (`1:2..3;2:1..2`) or as `[OUTER]/[INNER]`.
        #[arg(value_parser = parse_skew, required_unless_present = "pair", conflicts_with = "pair")]
        diagram: Option<SkewDiagram>,
        /// Diagram given as a partition pair `[OUTER]/[INNER]`.
        #[arg(long, value_parser = parse_skew)]
        pair: Option<SkewDiagram>,
    },
    /// List the members of Gamma, Upsilon or Upsilon-bar within the bounds.
    Gen {
        #[arg(long)]
        max_size: u32,
        /// Span bound; defaults to the size bound.
        #[arg(long)]
        max_span: Option<u32>,
        #[arg(long, value_enum, default_value_t = Flavor::Upsilon)]
        flavor: Flavor,
        /// Print only connected nonempty members.
        #[arg(long)]
        connected: bool,
        /// Draw each member under its row syntax.
        #[arg(long)]
        render: bool,
    },
    /// Compare the three membership tests on every diagram within the bounds.
    VerifyEquivalence {
        #[arg(long)]
        max_size: u32,
        /// Span bound; defaults to the size bound.
        #[arg(long)]
        max_span: Option<u32>,
    },
    /// Print the weight diagram of a partition and its arrow pairs.
    Arrows {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Print the partitions reachable by flipping arrows with distinct sources.
    Pi {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Draw a diagram.
    Render {
        #[arg(value_parser = parse_skew)]
        diagram: SkewDiagram,
        /// Label boxes by content (mod 10) with this content at (1, 1).
        #[arg(long, allow_hyphen_values = true)]
        contents: Option<i32>,
    },
    /// Cell-module decomposition matrix [W_r(lambda) : L_r(mu)].
    CellMatrix {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Projective decomposition matrix [P_r(nu) : L_r(mu)].
    CartanMatrix {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the Temperley-Lieb relations on the Grothendieck group.
    VerifyTl {
        #[arg(long)]
        r_max: u32,
        /// Inclusive range of q values, as LO:HI.
        #[arg(long, value_parser = parse_range, default_value = "-12:12", allow_hyphen_values = true)]
        q_range: (i32, i32),
    },
    /// Run every verification and exit nonzero on the first failing check.
    VerifyAll {
        #[arg(long)]
        max_size: u32,
        #[arg(long)]
        r_max: u32,
        /// Print a JSON summary instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn parse_skew(s: &str) -> Result<SkewDiagram, String> {
    s.parse::<SkewDiagram>().map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(i32, i32), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<i32>().map_err(|_| format!("invalid integer {x:?}"));
    let (lo, hi) = (num(a)?, num(b)?);
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Worker count from the environment if set, else from the flag.
fn resolve_workers(flag: usize) -> Result<usize, String> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("{WORKERS_ENV} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(flag),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match resolve_workers(cli.workers) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = with_workers(workers, |exec| commands::run(cli.command, exec));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => {
            fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout().write_all(outcome.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
