use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use assrkit_core::classify::DEFAULT_MAX_ORDER;
use assrkit_core::render::DEFAULT_DIGITS;
use assrkit_core::theorems::DEFAULT_TRIALS;

#[derive(Debug, Parser)]
#[command(name = "assrkit", version, about = "Combined matrices and sign regularity, in exact arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest order accepted by minor enumeration.
    #[arg(long, global = true, env = "ASSRKIT_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Significant digits in decimal renderings.
    #[arg(long, global = true, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u16).range(1..=40).map(|d| d as usize))]
    pub digits: usize,
    /// Include wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Run everything on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

/// A single matrix: a file or a built-in fixture.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MatrixSource {
    /// Matrix file (plain text or JSON; `-` reads stdin).
    pub path: Option<PathBuf>,
    /// Built-in fixture A1..A6.
    #[arg(long, value_parser = parse_fixture_id)]
    pub fixture: Option<assrkit_core::gen::FixtureId>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a matrix: SR, SSR, ASSR, staircase shape, irreducibility.
    Classify {
        #[command(flatten)]
        source: MatrixSource,
    },
    /// Compute the combined matrix exactly, with decimal renderings.
    Combined {
        #[command(flatten)]
        source: MatrixSource,
    },
    /// Run every structural check over a set of matrices.
    Verify(VerifyArgs),
    /// Write the reference matrices and their expected facts to a directory.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
    /// Generate test matrices.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matrix files to verify.
    pub paths: Vec<PathBuf>,
    /// Verify the six reference matrices.
    #[arg(long)]
    pub fixtures: bool,
    /// Verify one reference matrix (repeatable).
    #[arg(long = "fixture", value_parser = parse_fixture_id)]
    pub fixture: Vec<assrkit_core::gen::FixtureId>,
    /// Verify rejection-sampled ASSR matrices.
    #[arg(long)]
    pub random: bool,
    /// Order of sampled matrices.
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Candidates drawn with --random.
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Random transformations per matrix in the invariance check.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub lemma_trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Rejection-sampled ASSR matrices.
    Assr,
    /// A reference matrix under random positive diagonal scaling.
    Scaled,
    /// Signed diagonal or flipped signed diagonal matrices.
    Monomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Txt,
    Json,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value_t = GenKind::Assr)]
    pub kind: GenKind,
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Candidates (assr) or matrices (scaled, monomial).
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reference matrix for --kind scaled.
    #[arg(long, value_parser = parse_fixture_id, default_value = "A2")]
    pub fixture: assrkit_core::gen::FixtureId,
    /// Write one file per matrix here instead of printing.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FileFormat::Txt)]
    pub format: FileFormat,
}

fn parse_fixture_id(s: &str) -> Result<assrkit_core::gen::FixtureId, String> {
    assrkit_core::gen::FixtureId::parse(s).ok_or_else(|| format!("unknown fixture `{s}` (expected A1..A6)"))
}
