mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::{is_check_failure, Report};

#[derive(Parser, Debug)]
#[command(name = "liecomp", version, about = "Exact completions of rational Lie algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random samples.
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Largest supported degree of a minimal polynomial.
    #[arg(long, global = true, env = "LIECOMP_MAX_DEGREE", default_value_t = 8)]
    pub max_degree: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesChoice {
    LowerCentral,
    Derived,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeChoice {
    Structural,
    Sampled,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi identity on all basis triples.
    Validate { algebra: PathBuf },
    /// Lower central and derived series.
    Series {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = SeriesChoice::Both)]
        kind: SeriesChoice,
    },
    /// Centroid and its ring structure.
    Centroid { algebra: PathBuf },
    /// Centralizer of a vector given as comma-separated field elements.
    Centralizer {
        algebra: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    Center { algebra: PathBuf },
    /// Base change E (x)_Q L of an algebra over Q.
    Tensor {
        algebra: PathBuf,
        /// Minimal polynomial of E, ascending coefficients.
        #[arg(long, allow_hyphen_values = true)]
        minpoly: String,
    },
    /// Whether an E-subspace of E (x)_Q L is an entangled ideal.
    Entangled {
        algebra: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        minpoly: String,
        /// JSON array of spanning vectors in E (x) L.
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Build a completion: plain with --minpoly, twisted otherwise.
    Complete(CompletionArgs),
    /// Check the scalar action of K(L, f, sigma).
    VerifyAction {
        algebra: PathBuf,
        #[arg(long)]
        twist: Option<PathBuf>,
    },
    /// Compare the series of L and of a completion.
    Preserve(CompletionArgs),
    /// E = Q[t]/(q) acting on Q^n through the companion matrix.
    Prop1 {
        #[arg(long)]
        n: usize,
        /// Ascending coefficients of q; defaults to t^n - 2.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Sampled centralizer dimensions against [E:Q].
    Bound { algebra: PathBuf },
    /// Whether dim_Q L = n admits a completion with dim_E K = m.
    Potential {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check the 25 axioms on a structure file.
    Axioms {
        structure: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeChoice::Structural)]
        mode: ModeChoice,
    },
    /// The statement about fields that has no finite check.
    Note,
}

#[derive(Args, Debug)]
pub struct CompletionArgs {
    pub algebra: PathBuf,
    /// Plain mode: L is over Q and E = Q[t]/(minpoly).
    #[arg(long, allow_hyphen_values = true)]
    pub minpoly: Option<String>,
    /// Plain mode: entangled ideal (JSON array of vectors); defaults to 0.
    #[arg(long, requires = "minpoly")]
    pub ideal: Option<PathBuf>,
    /// Twisted mode: twist file; defaults to (L, id, id).
    #[arg(long, conflicts_with = "minpoly")]
    pub twist: Option<PathBuf>,
    /// Write the completion (with structure constants) to this file.
    #[arg(long)]
    pub write: Option<PathBuf>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Series { .. } => "series",
            Command::Centroid { .. } => "centroid",
            Command::Centralizer { .. } => "centralizer",
            Command::Center { .. } => "center",
            Command::Tensor { .. } => "tensor",
            Command::Entangled { .. } => "entangled",
            Command::Complete(_) => "complete",
            Command::VerifyAction { .. } => "verify-action",
            Command::Preserve(_) => "preserve",
            Command::Prop1 { .. } => "prop1",
            Command::Bound { .. } => "bound",
            Command::Potential { .. } => "potential",
            Command::Axioms { .. } => "axioms",
            Command::Note => "note",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let mut report = Report::default();
    let code = match commands::run(&cli.command, &cli.global, &mut report) {
        Ok(()) if report.failed() => 1,
        Ok(()) => 0,
        Err(e) => {
            let code = if is_check_failure(&e) { 1 } else { 2 };
            if code == 1 {
                report.fail("error", format!("FAIL: {e}"));
            } else {
                report.mark_failed();
                eprintln!("error: {e}");
            }
            code
        }
    };
    match cli.global.output {
        Output::Text => print!("{}", report.render_text()),
        Output::Json => print!("{}", report.render_json(name)),
    }
    ExitCode::from(code)
}
