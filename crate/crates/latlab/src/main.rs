use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use latlab::commands::{self, parse_list, CraigMethod, RunConfig};
use latlab::output::Format;
use latlab::tables::TableId;
use latlab::{CliError, CliResult, Outcome};

/// Integral lattices cut out by linear constraints: construction,
/// minimal vectors, perfection and the reference tables.
#[derive(Parser, Debug)]
#[command(name = "latlab", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available cores).
    #[arg(long, global = true, env = "LATLAB_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Largest norm searched when looking for the minimum.
    #[arg(long, global = true, default_value_t = latlab_core::lattice::DEFAULT_SEARCH_CAP)]
    norm_cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel basis, Gram matrix and determinant.
    Build { spec: String },
    /// Determinant, minimum, minimal pairs and perfection default.
    Analyze { spec: String },
    /// Vectors of a given norm (default: the minimal ones), one per sign pair.
    Minvec {
        spec: String,
        #[arg(long)]
        norm: Option<u64>,
    },
    /// Closed-form determinant and pair count against the computed values.
    Verify { spec: String },
    /// Recompute a reference table and diff it against the stored values.
    Table {
        #[arg(value_enum)]
        id: TableId,
    },
    /// Perfection of L_d(excl) for d = 1..dmax and the resulting D.
    #[command(name = "scan-D")]
    ScanD {
        #[arg(long, default_value = "")]
        excl: String,
        #[arg(long)]
        dmax: usize,
    },
    /// Graph on minimal pairs seen from a base minimal vector.
    Graph {
        spec: String,
        #[arg(long)]
        base_vector: Option<String>,
    },
    /// Pairs of norm 2(k+1) in C_{q-1,k}.
    Craig {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CraigMethod::Histogram)]
        method: CraigMethod,
    },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let jobs = match cli.jobs {
        Some(j) => j as usize,
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    let cfg = RunConfig { format: cli.format, jobs, norm_cap: cli.norm_cap };
    commands::with_jobs(jobs, move || match cli.command {
        Command::Build { spec } => commands::build(&cfg, &spec),
        Command::Analyze { spec } => commands::analyze(&cfg, &spec),
        Command::Minvec { spec, norm } => commands::minvec(&cfg, &spec, norm),
        Command::Verify { spec } => commands::verify(&cfg, &spec),
        Command::Table { id } => commands::table(&cfg, id),
        Command::ScanD { excl, dmax } => commands::scan_d(&cfg, &parse_list(&excl)?, dmax),
        Command::Graph { spec, base_vector } => {
            let base = base_vector.as_deref().map(parse_list).transpose()?;
            commands::graph(&cfg, &spec, base)
        }
        Command::Craig { q, k, method } => commands::craig(&cfg, q, k, method),
    })?
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: mismatch against the reference values");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_byte(&e))
        }
    }
}

fn exit_byte(e: &CliError) -> u8 {
    e.exit_code() as u8
}
