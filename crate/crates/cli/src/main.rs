use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use syzygy_cli::commands::{self, Check, Method, Surface};
use syzygy_cli::input::{self, Input};
use syzygy_cli::{CliError, Format, Options, Report};
use syzygy_core::fixtures;

#[derive(Parser)]
#[command(name = "syzygy", version, about = "Cohen-Macaulay projective modules over Jacobian algebras of the punctured disc")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Characteristic of the ground field.
    #[arg(long = "char", global = true)]
    char: Option<u32>,
    /// Longest path considered when building the algebra.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Step bound for syzygy orbits and homological dimensions.
    #[arg(long, global = true)]
    orbit_bound: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON triangulation or quiver presentation.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Built-in example, see `syzygy enumerate --help`.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct VerifySource {
    #[arg(short, long)]
    input: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    /// Check every triangulation with this many marked points.
    #[arg(long)]
    sweep: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the algebra, its projectives and injectives, and its Gorenstein data.
    Build {
        #[command(flatten)]
        source: Source,
    },
    /// List the Cohen-Macaulay projective modules.
    Cmp {
        #[command(flatten)]
        source: Source,
        /// Defaults to both for triangulations and algebraic for quiver presentations.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Igusa-Todorov dimensions.
    Itdim {
        #[command(flatten)]
        source: Source,
        /// Summand of the module to measure, as P(v), I(v) or S(v); repeatable.
        #[arg(long)]
        module: Vec<String>,
        #[arg(long)]
        per_module: bool,
    },
    /// The stable Auslander-Reiten quiver of the CMP category.
    Arquiver {
        #[command(flatten)]
        source: Source,
    },
    /// Run the consistency checks on one input or a whole sweep.
    Verify {
        #[command(flatten)]
        source: VerifySource,
        #[arg(long, value_enum, default_value_t = Surface::Punctured)]
        surface: Surface,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },
    /// List triangulations of the punctured n-gon or the n-gon.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Surface::Punctured)]
        surface: Surface,
    },
}

fn load(input: &Option<PathBuf>, fixture: &Option<String>, o: &Options) -> Result<Input, CliError> {
    if let Some(path) = input {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return input::parse(&text, o.char);
    }
    let name = fixture.as_deref().unwrap_or_default();
    if let Some(t) = fixtures::triangulation(name) {
        return Ok(Input::Punctured(t));
    }
    if let Some(p) = fixtures::algebra(name) {
        let text = serde_json::to_string(&input::presentation_json(&p)).expect("presentations serialize");
        return input::parse(&text, o.char);
    }
    let known: Vec<&str> = fixtures::TRIANGULATION_FIXTURES.into_iter().chain(fixtures::ALGEBRA_FIXTURES).collect();
    Err(CliError::Input(format!("unknown fixture {name:?}; known: {}", known.join(", "))))
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let mut o = Options { char: cli.char, seed: cli.seed, jobs: cli.jobs, format: cli.format, ..Options::default() };
    if let Some(m) = cli.max_len {
        o.max_len = m;
    }
    if let Some(b) = cli.orbit_bound {
        o.orbit_bound = b;
    }
    if o.format == Format::Dot && !matches!(cli.command, Command::Arquiver { .. }) {
        return Err(CliError::Input("--format dot applies to arquiver only".into()));
    }
    match cli.command {
        Command::Build { source } => commands::build(&load(&source.input, &source.fixture, &o)?, &o),
        Command::Cmp { source, method } => {
            let input = load(&source.input, &source.fixture, &o)?;
            let method = method.unwrap_or(if matches!(input, Input::Algebra(_)) { Method::Algebraic } else { Method::Both });
            commands::cmp(&input, method, &o)
        }
        Command::Itdim { source, module, per_module } => {
            commands::itdim(&load(&source.input, &source.fixture, &o)?, &module, per_module, &o)
        }
        Command::Arquiver { source } => commands::arquiver(&load(&source.input, &source.fixture, &o)?, &o),
        Command::Verify { source, surface, check } => match source.sweep {
            Some(n) => commands::verify_sweep(n, surface, check, &o),
            None => commands::verify_input(&load(&source.input, &source.fixture, &o)?, check, &o),
        },
        Command::Enumerate { n, surface } => commands::enumerate(n, surface, &o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            print!("{}", r.body);
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("syzygy: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
