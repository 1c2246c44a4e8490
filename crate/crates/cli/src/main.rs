//! `weilalg`: run computations and verification suites on quadratic Lie
//! algebras from the built-in catalog or a JSON description file.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails, 2 on
//! malformed input or an algebra the command cannot use.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use weilalg::liealg::{catalog, catalog_entry, parse_spec, CatalogEntry};
use weilalg::verify::{Settings, Suite};
use weilalg::{Error, Result};

use commands::Output;
use render::Report;

#[derive(Parser)]
#[command(name = "weilalg", version, about = "Exact computations with quadratic Lie algebras and their Weil algebras")]
#[command(group(ArgGroup::new("source").required(true).args(["input", "catalog"])))]
struct Cli {
    /// JSON file describing a quadratic Lie algebra.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Name of a built-in algebra.
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Include wall-clock seconds in JSON output, which makes it vary between runs.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Antisymmetry, Jacobi, symmetry, invariance and nondegeneracy.
    Validate,
    /// Duflo images of invariant polynomials up to a degree.
    Duflo { degree: usize },
    /// The cubic Dirac element and its defining properties.
    Dirac,
    /// The square of the Dirac element.
    DiracSquare,
    /// Quantize a Weil monomial given as tokens `xN`, `bxN`, `hxN`.
    Quantize {
        #[arg(required = true, num_args = 1..)]
        tokens: Vec<String>,
    },
    /// Harish-Chandra projections for a triangular decomposition.
    Hc,
    /// Relative Dirac element and Vogan's identities.
    Vogan,
    /// Duflo-Rouvière map for a symmetric decomposition.
    Rouviere,
    /// Rigidity homotopy between the two connections on W(x)W.
    Rigidity,
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = ["core", "weil", "relative", "all"])]
        suite: String,
    },
}

impl Command {
    fn label(&self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::Duflo { degree } => format!("duflo {degree}"),
            Command::Dirac => "dirac".into(),
            Command::DiracSquare => "dirac-square".into(),
            Command::Quantize { tokens } => format!("quantize {}", tokens.join(" ")),
            Command::Hc => "hc".into(),
            Command::Vogan => "vogan".into(),
            Command::Rouviere => "rouviere".into(),
            Command::Rigidity => "rigidity".into(),
            Command::Verify { suite } => format!("verify --suite {suite}"),
        }
    }
}

fn load(cli: &Cli) -> Result<CatalogEntry> {
    if let Some(path) = &cli.input {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        return parse_spec(&text);
    }
    let name = cli.catalog.as_deref().unwrap_or_default();
    catalog_entry(name).ok_or_else(|| {
        let known: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        Error::Parse(format!("unknown catalog algebra {name:?}; known: {}", known.join(", ")))
    })
}

fn run(cli: &Cli, entry: &CatalogEntry) -> Result<Output> {
    let g = &entry.algebra;
    let deg = cli.max_degree as usize;
    let validation = g.validate();
    if matches!(cli.command, Command::Validate) || validation.iter().any(|c| !c.passed()) {
        return Ok(Output { result: Vec::new(), checks: validation });
    }
    match &cli.command {
        Command::Validate => unreachable!("handled above"),
        Command::Duflo { degree } => commands::duflo(g, *degree),
        Command::Dirac => commands::dirac(g),
        Command::DiracSquare => commands::dirac_square(g),
        Command::Quantize { tokens: raw } => {
            let tokens: Vec<String> = raw.iter().flat_map(|t| t.split_whitespace().map(str::to_string)).collect();
            commands::quantize(g, &tokens)
        }
        Command::Hc => commands::hc(entry, deg),
        Command::Vogan => commands::vogan(entry),
        Command::Rouviere => commands::rouviere(entry, deg),
        Command::Rigidity => commands::rigidity(g, deg),
        Command::Verify { suite } => commands::verify(entry, suite.parse::<Suite>()?, &Settings::with_max_degree(deg)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let entry = match load(&cli) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let out = match pool.install(|| run(&cli, &entry)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed().as_secs_f64();
    let report =
        Report::new(entry.name.clone(), cli.command.label(), out.result, out.checks, cli.timings.then_some(elapsed));
    match cli.format {
        Format::Json => println!("{}", report.json()),
        Format::Text => print!("{}", report.text(elapsed)),
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!("first failing check: {} [{}]", c.name, c.anchor);
            if let Some(w) = &c.witness {
                eprintln!("witness: {w}");
            }
            ExitCode::from(1)
        }
    }
}
