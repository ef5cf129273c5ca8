use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kv_cli::commands::{self, Outcome, Session};
use kv_cli::exit;
use kvsyz::{Error, Polynomial, Ring, DEFAULT_PRIME};

#[derive(Parser, Debug)]
#[command(name = "kv", version, about = "Syzygies of codimension-two ideals in k[x,y,z]")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, env = "KV_DEFAULT_P", default_value_t = DEFAULT_PRIME as u64)]
    p: u64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest degree examined when certifying Hilbert polynomials.
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u32).range(12..))]
    degree_cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Input {
    /// Comma-separated homogeneous generators.
    ideal: Option<String>,
    /// Read generators from a file, one per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: Input,
        /// Position-over-term instead of term-over-position (same basis for ideals).
        #[arg(long)]
        pot: bool,
    },
    /// Minimal syzygies on the generators.
    Syz {
        #[command(flatten)]
        input: Input,
    },
    /// Saturation with respect to (x, y, z).
    Saturate {
        #[command(flatten)]
        input: Input,
    },
    /// Hilbert function and polynomial of the ideal or of R/I.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        quotient: bool,
    },
    /// S, K and V with the K = V and lci verdicts.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Runs a verification suite.
    Verify {
        /// main-theorem, herzog, arrangements, five-points, sym2, saturation-lemma or oracle.
        suite: String,
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn read_input(ring: &Ring, input: &Input) -> Result<Vec<Polynomial>, Error> {
    match (&input.ideal, &input.file) {
        (Some(text), None) => ring.parse_list(text),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            text.lines().filter(|l| !l.trim().is_empty()).map(|l| ring.parse(l.trim())).collect()
        }
        _ => Err(Error::InvalidInput("give generators either inline or with --file".into())),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let session = Session { ring: Ring::new(cli.p)?, seed: cli.seed, degree_cap: cli.degree_cap, json: cli.json };
    let ring = session.ring;
    match &cli.command {
        Command::Gb { input, pot } => commands::gb(&session, &read_input(&ring, input)?, *pot),
        Command::Syz { input } => commands::syz(&session, &read_input(&ring, input)?),
        Command::Saturate { input } => commands::saturate(&session, &read_input(&ring, input)?),
        Command::Hilbert { input, quotient } => commands::hilbert(&session, &read_input(&ring, input)?, *quotient),
        Command::Check { input } => commands::check(&session, &read_input(&ring, input)?),
        Command::Verify { suite, trials } => commands::verify(&session, suite, *trials),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.output);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INPUT)
        }
    }
}
