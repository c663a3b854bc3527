use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Canon descent polynomials of Dyck paths.
#[derive(Parser)]
#[command(name = "canon", version, about)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Config {
    /// Emit JSON on standard output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (0 = one per core). CANON_THREADS takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest semilength for which all n! labelings are enumerated.
    #[arg(long, global = true, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=12))]
    brute_force_bound: u64,
    /// Largest semilength for the exhaustive all-paths suites.
    #[arg(long, global = true, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..))]
    exhaustive_bound: u64,
}

impl Config {
    pub fn json(&self) -> bool {
        self.json
    }

    pub fn bound(&self) -> usize {
        self.brute_force_bound as usize
    }

    pub fn exhaustive(&self) -> usize {
        self.exhaustive_bound as usize
    }
}

#[derive(Subcommand)]
enum Command {
    /// Canon descent polynomial C_d(t).
    Poly {
        path: String,
        /// Restrict to labelings starting with 1 or n.
        #[arg(long)]
        tilde: bool,
    },
    /// Greedy bounce labeling.
    Bperm {
        path: String,
        /// Print the full step labeling.
        #[arg(long)]
        labels: bool,
    },
    /// Valley-swap labeling.
    Vperm {
        path: String,
        /// Print every intermediate labeling of the walk.
        #[arg(long)]
        trace: bool,
    },
    /// m_d, both constructions, B_d and the partition of M_d.
    Maximizers { path: String },
    /// The compatible paths B_d.
    Bset { path: String },
    /// The poset P_{d,b} and its linear extensions.
    Poset { path: String, b: String },
    /// Bounce path, composition and factors.
    Bounce { path: String },
    /// Integer sequences: pk-eq-bpk, bd-singleton, md-dist, md-one, candy, generalized-bperm.
    Sequence {
        name: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Write the headline series as a b-file.
        #[arg(long)]
        bfile: Option<std::path::PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Suite names, comma separated, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Descent polynomial of a rectangular tableau, rows separated by `/`.
    TableauPoly { tableau: String },
}

fn configure_threads(requested: usize) -> Result<(), String> {
    let threads = match std::env::var("CANON_THREADS") {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| format!("CANON_THREADS must be a number, got `{v}`"))?,
        Err(_) => requested,
    };
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(cli.config.threads) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let outcome = match cli.command {
        Command::Poly { path, tilde } => commands::poly(&cli.config, &path, tilde),
        Command::Bperm { path, labels } => commands::bperm(&cli.config, &path, labels),
        Command::Vperm { path, trace } => commands::vperm(&cli.config, &path, trace),
        Command::Maximizers { path } => commands::maximizers(&cli.config, &path),
        Command::Bset { path } => commands::bset(&cli.config, &path),
        Command::Poset { path, b } => commands::poset(&cli.config, &path, &b),
        Command::Bounce { path } => commands::bounce(&cli.config, &path),
        Command::Sequence { name, max_n, bfile } => commands::sequence(&cli.config, &name, max_n, bfile.as_deref()),
        Command::Verify { max_n, suite } => commands::verify(&cli.config, max_n, &suite),
        Command::TableauPoly { tableau } => commands::tableau_poly(&cli.config, &tableau),
    };
    match outcome {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
