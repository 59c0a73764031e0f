use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use e6check_cli::commands::{self, CubicOptions, CubicSource, DEFAULT_COEFF_BOUND, DEFAULT_TRIALS};
use e6check_cli::{RunReport, UsageError};

#[derive(Debug, Parser)]
#[command(name = "e6check", version)]
#[command(
    about = "Exact checks for the rank-50 theorem, the E6 branching table and the Higgs calculus"
)]
struct Cli {
    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, kernel and character blocks of nu for the Fermat cubic.
    Fermat,
    /// Smoothness, Hilbert function, pairing and rank of nu for given or random cubics.
    Cubic(CubicArgs),
    /// Sections of O(1) and O(2) on Gr(2,5), by tableaux and by Plücker relations.
    Grassmannian {
        /// Perturb the Plücker count to exercise the failure path.
        #[arg(long, hide = true)]
        inject_disagreement: bool,
    },
    /// Replay of the E6 branching table and the subgroup elimination.
    Branching {
        #[command(flatten)]
        table: TableArgs,
    },
    /// Randomized property suite for infinitesimal graded Higgs bundles.
    HiggsSelftest {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = at_least_one)]
        trials: usize,
    },
    /// Every subcommand, with random cubics drawn from --seed.
    All {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = at_least_one)]
        random: usize,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        coeff_bound: u32,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = at_least_one)]
        trials: usize,
        #[command(flatten)]
        table: TableArgs,
    },
}

#[derive(Debug, Args)]
struct CubicArgs {
    /// Cubic file: one JSON document, or one per line.
    #[arg(long, conflicts_with_all = ["random", "seed", "coeff_bound"])]
    input: Option<PathBuf>,
    /// Number of random cubics (default 100; needs --seed).
    #[arg(long, value_parser = at_least_one)]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    coeff_bound: u32,
    /// Also compute the rank of nu modulo this prime.
    #[arg(long)]
    prime: Option<u64>,
    /// Write the cubics checked, one JSON document per line.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Branching table to use instead of the embedded one; must match its checksum.
    #[arg(long)]
    table: Option<PathBuf>,
}

fn at_least_one(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn cubic_options(args: &CubicArgs) -> Result<(CubicOptions, Vec<u64>), UsageError> {
    let (source, seeds) = match (&args.input, args.seed) {
        (Some(path), _) => (CubicSource::File(path.clone()), vec![]),
        (None, Some(seed)) => (
            CubicSource::Random {
                count: args.random.unwrap_or(DEFAULT_TRIALS),
                seed,
                coeff_bound: args.coeff_bound,
            },
            vec![seed],
        ),
        (None, None) => {
            return Err(UsageError(
                "random cubics need --seed (or pass --input)".into(),
            ))
        }
    };
    let opts = CubicOptions {
        source,
        prime: args.prime,
        emit: args.emit.clone(),
    };
    Ok((opts, seeds))
}

fn run(cli: &Cli, command: String) -> Result<RunReport, UsageError> {
    let report = match &cli.command {
        Command::Fermat => {
            let mut r = RunReport::new(command, vec![]);
            r.extend(commands::fermat());
            r
        }
        Command::Cubic(args) => {
            let (opts, seeds) = cubic_options(args)?;
            let mut r = RunReport::new(command, seeds);
            r.extend(commands::cubic(&opts)?);
            r
        }
        Command::Grassmannian {
            inject_disagreement,
        } => {
            let mut r = RunReport::new(command, vec![]);
            r.extend(commands::grassmannian(*inject_disagreement));
            r
        }
        Command::Branching { table } => {
            let table = commands::load_table(table.table.as_deref())?;
            let mut r = RunReport::new(command, vec![]);
            r.extend(commands::branching(&table)?);
            r
        }
        Command::HiggsSelftest { seed, trials } => {
            let mut r = RunReport::new(command, vec![*seed]);
            r.extend(commands::higgs_selftest(*seed, *trials)?);
            r
        }
        Command::All {
            seed,
            random,
            coeff_bound,
            prime,
            trials,
            table,
        } => {
            let table = commands::load_table(table.table.as_deref())?;
            let opts = CubicOptions {
                source: CubicSource::Random {
                    count: *random,
                    seed: *seed,
                    coeff_bound: *coeff_bound,
                },
                prime: *prime,
                emit: None,
            };
            commands::all(command, *seed, &opts, *trials, &table)?
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // The program path is left out so reports do not depend on the install location.
    let command = std::iter::once("e6check".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, command) {
        Ok(report) => {
            let doc = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            print!("{doc}");
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
