use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use iflag::Limits;
use iflag_cli::commands::{self, CliError, Format};

#[derive(Parser, Debug)]
#[command(name = "iflag", version, about = "Shelling and flag vectors of uniform hypergraphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Worker threads (0 = one per core). Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Largest allowed N! for shelling enumeration and canonical forms.
    #[arg(long, global = true, default_value_t = 3_628_800)]
    max_factorial: u128,

    /// Largest allowed number of labeled graphs in one enumeration.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    max_graphs: u128,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Flag vector of a graph document.
    Flag {
        #[arg(long)]
        input: PathBuf,
        /// Largest stratum vertex count in the tower (raised to N-1 if smaller).
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Shelling vector of a graph document.
    Shell {
        #[arg(long)]
        input: PathBuf,
    },
    /// Rank of the span of flag vectors against p(N), for N = 1..=n-max.
    RankTable {
        #[arg(long = "i", default_value_t = 2)]
        level: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Dimensions of one stratum of the quotient tower.
    QuotientInfo {
        #[arg(long)]
        level: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// p(n) for n = 0..=n-max.
    Partitions {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// All level-i graphs on n vertices, one document per line.
    Enumerate {
        #[arg(long = "i")]
        level: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Read a facet file as a graph document.
    IngestComplex {
        #[arg(long)]
        input: PathBuf,
    },
}

fn run(command: Command, limits: &Limits) -> Result<String, CliError> {
    match command {
        Command::Flag { input, m_max } => commands::flag(&input, m_max, limits),
        Command::Shell { input } => commands::shell(&input, limits),
        Command::RankTable {
            level,
            n_max,
            up_to_iso,
            format,
        } => commands::rank_table(level, n_max, up_to_iso, format, limits),
        Command::QuotientInfo { level, m, format } => {
            commands::quotient_info(level, m, format, limits)
        }
        Command::Partitions { n_max, format } => Ok(commands::partitions(n_max, format)),
        Command::Enumerate {
            level,
            n,
            up_to_iso,
        } => commands::enumerate(level, n, up_to_iso, limits),
        Command::IngestComplex { input } => commands::ingest_complex(&input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_factorial: cli.global.max_factorial,
        max_graphs: cli.global.max_graphs,
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.workers)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("iflag: cannot start worker pool: {e}");
            return ExitCode::FAILURE;
        }
    };
    match pool.install(|| run(cli.command, &limits)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("iflag: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
