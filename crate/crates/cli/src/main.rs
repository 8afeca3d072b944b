mod commands;
mod parse;
mod table;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bruhatkit", version, about = "Bruhat cells, Weyl group classes and unipotent classes")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    /// Largest Weyl group rank that may be enumerated.
    #[arg(long, default_value_t = bruhatkit::weyl::DEFAULT_RANK_CAP, global = true)]
    pub rank_cap: usize,

    /// Largest number of group elements a run may visit.
    #[arg(
        long,
        env = "BRUHATKIT_BUDGET",
        default_value_t = bruhatkit::lab::DEFAULT_ENUMERATION_BUDGET,
        global = true
    )]
    pub budget: u128,

    /// Largest single Bruhat cell (or centralizer search) that may be enumerated.
    #[arg(long, default_value_t = bruhatkit::bruhat::DEFAULT_CELL_BUDGET, global = true)]
    pub cell_budget: u128,

    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Run symplectic groups in characteristic 2 (reported, not asserted).
    #[arg(long, global = true)]
    pub allow_bad_prime: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bruhat decomposition g = b1·ẇ·b2 of an invertible matrix.
    Decompose {
        /// Matrix JSON, inline or as a file path ("-" for stdin).
        matrix: String,
    },
    /// Relative position of two flags, given by basis matrices.
    Relpos { flag1: String, flag2: String },
    /// Conjugacy classes of a Weyl group with d_C and ellipticity.
    Classes { family: String, rank: usize },
    /// The table C -> Φ(C) for types A and BC.
    Phi { family: String, rank: usize },
    /// Brute-force checks over F_q for gl/sl/sp of the given matrix size.
    Verify {
        group: String,
        dim: usize,
        /// Prime(s); two or more enable the B-orbit and centralizer checks.
        #[arg(long, required = true, value_delimiter = ',')]
        q: Vec<u64>,
        /// Random draws per q in the randomized section (0 disables it).
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Order of the finite group of the given type over F_q.
    Order {
        family: String,
        rank: usize,
        #[arg(long)]
        q: u64,
        /// Order of GL_{rank+1} instead of the Chevalley group (type A only).
        #[arg(long)]
        gl: bool,
    },
    /// Poincaré polynomial sum_w q^l(w), checked against the degree product.
    Poincare { family: String, rank: usize },
    /// Product of two T-basis words in the Hecke algebra.
    Hecke {
        /// Generator indices, e.g. "12", "1 2" or "1,2"; empty for T_e.
        word1: String,
        word2: String,
        family: String,
        rank: usize,
    },
    /// Size of every Bruhat cell of gl/sl/sp over F_q.
    CellCount {
        group: String,
        dim: usize,
        #[arg(long)]
        q: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.global.workers {
        pool = pool.num_threads(n.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| commands::run(&cli.global, cli.command)) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
