use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "liecohom",
    version,
    about = "Exact Lie algebra cohomology, relative and invariant complexes, and de Rham cohomology of G/H"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Validate an algebra and report its structure.
    Check(CheckArgs),
    /// Cohomology of the full Chevalley-Eilenberg complex.
    Betti(DegreeArgs),
    /// Cohomology relative to the subalgebra h.
    Relative(DegreeArgs),
    /// Cohomology of the g-invariant cochains.
    Invariant(DegreeArgs),
    /// Cohomology of the quotient algebra g/h (h must be an ideal).
    Quotient(DegreeArgs),
    /// de Rham cohomology of G/H by theorem dispatch.
    Gh(GhArgs),
    /// Dimensions of the E1 page of the Cartan-complex spectral sequence.
    E1(E1Args),
    /// Basic cohomology and averaging on a linear torus foliation.
    Torus(TorusArgs),
    /// List catalog algebras or print one as an algebra file.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Catalog algebra name (see `liecohom catalog`).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub catalog: Option<String>,
    /// Algebra file (JSON).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Subalgebra rows: a path, or inline JSON `[["1","0"],...]`.
    #[arg(long)]
    pub subalgebra: Option<String>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    #[command(flatten)]
    pub source: Source,
    /// Compute a single degree.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Include representative cocycles.
    #[arg(long)]
    pub representatives: bool,
}

#[derive(Debug, Args)]
pub struct GhArgs {
    #[command(flatten)]
    pub source: Source,
    /// Assert that G / closure(H) is compact.
    #[arg(long)]
    pub assume_compact_quotient: bool,
    /// Assert that H is dense in G.
    #[arg(long)]
    pub assume_dense: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub representatives: bool,
}

#[derive(Debug, Args)]
pub struct E1Args {
    #[command(flatten)]
    pub source: Source,
    /// Largest symmetric degree.
    #[arg(long, default_value_t = 4)]
    pub imax: usize,
    /// Basic Betti numbers, comma separated (default: the Betti numbers of g).
    #[arg(long, value_delimiter = ',')]
    pub basic_betti: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TorusArgs {
    /// Foliation spec (JSON).
    #[arg(long)]
    pub file: PathBuf,
    /// Half-width of the mode box for acyclicity certificates.
    #[arg(long, default_value_t = liecohom::torus::DEFAULT_MODE_BOX, value_parser = clap::value_parser!(i64).range(0..))]
    pub mode_box: i64,
    /// Closed form to average, with a homotopy certificate (JSON).
    #[arg(long)]
    pub form: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Entry to print; lists all entries when omitted.
    pub name: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

impl Verb {
    pub fn format(&self) -> Format {
        match self {
            Verb::Check(a) => a.format,
            Verb::Betti(a) | Verb::Relative(a) | Verb::Invariant(a) | Verb::Quotient(a) => a.format,
            Verb::Gh(a) => a.format,
            Verb::E1(a) => a.format,
            Verb::Torus(a) => a.format,
            Verb::Catalog(a) => a.format,
        }
    }
}
