//! Batch front end for `boxd-core`.
//!
//! Every command reads JSON files, writes one JSON document to standard
//! output (or to `-o <path>`), and exits with 0 on success, 1 on a domain or
//! input error and 2 when a resource guard refuses the work. Errors are
//! reported as `{"error":{"kind":...,"message":...}}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use boxd_core::homology::FieldTag;
use boxd_core::{Error, Face};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;
pub mod demo;

/// Default limit on the vertex count of any input complex or representation.
pub const DEFAULT_MAX_VERTICES: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "boxd", version, about = "Boxicity, Leray numbers and convex representations of simplicial complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Dimension parameter d.
    #[arg(short = 'd', global = true)]
    pub d: Option<usize>,
    /// Coefficient field for homology.
    #[arg(long, global = true, default_value = "gf2")]
    pub field: FieldTag,
    /// Refuse inputs with more vertices than this.
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    /// Write the JSON result here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Queries on a single complex.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Boxicity bounds, covers and decompositions.
    #[command(subcommand)]
    Boxd(BoxdCmd),
    /// Partial Steiner systems.
    #[command(subcommand)]
    Designs(DesignsCmd),
    /// Convex representations and their nerves.
    #[command(subcommand)]
    Represent(RepresentCmd),
    /// Built-in reproducible pipelines.
    Demo {
        name: DemoName,
        /// Vertex count for `roberts-n`.
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexCmd {
    /// Vertex count, facets, missing faces and h(X).
    Info { complex: PathBuf },
    /// Reduced Betti numbers.
    Homology { complex: PathBuf },
    /// Leray number.
    Leray { complex: PathBuf },
    /// Γ(X) and the duality comparison with X.
    Gamma { complex: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BoxdCmd {
    /// Upper bound, lower certificate and (for small inputs) the exact cover minimum.
    Run { complex: PathBuf },
    /// Greedy cover of the missing faces by (d+1)-sets.
    Cover { complex: PathBuf },
    /// Decomposition into factors with one cover set each.
    Decompose {
        complex: PathBuf,
        /// JSON list of (d+1)-sets to use instead of the greedy cover.
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Show that an assignment of missing faces to fewer factors fails.
    Refute {
        complex: PathBuf,
        /// `{"factors":s,"map":[[[face],index],...]}`.
        #[arg(long)]
        assignment: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum DesignsCmd {
    /// Classify a design file.
    Check { design: PathBuf },
    /// Emit a built-in design.
    Builtin { name: String },
}

#[derive(Debug, Subcommand)]
pub enum RepresentCmd {
    /// Representation in dimension |U|-1 from a set U of vertices.
    Wegner {
        complex: PathBuf,
        /// Comma-separated vertex labels.
        #[arg(long, value_parser = parse_face_arg)]
        u: Face,
    },
    /// Cartesian product of representations on a common vertex set.
    Product {
        #[arg(required = true)]
        representations: Vec<PathBuf>,
    },
    /// Lift a representation by one dimension, adding two simplices.
    Augment {
        representation: PathBuf,
        #[arg(long, value_parser = parse_face_arg)]
        s1: Face,
        #[arg(long, value_parser = parse_face_arg)]
        s2: Face,
    },
    /// Check that a representation's nerve is the given complex.
    Verify {
        representation: PathBuf,
        complex: PathBuf,
        /// Test all non-empty vertex subsets independently.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Nerve of a representation or box family.
    Nerve { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    FanoRep4,
    FanoBox2,
    RobertsN,
    X29Build,
}

fn parse_face_arg(s: &str) -> Result<Face, String> {
    let labels = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Face::from_labels(labels).map_err(|e| e.to_string())
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("resource guard: {what} ({actual} > {limit}); raise --max-vertices to override")]
    Guard { what: &'static str, actual: usize, limit: usize },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Guard { .. } => 2,
            CliError::Core(e) if e.is_resource_refusal() => 2,
            _ => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) if e.is_resource_refusal() => "guard",
            CliError::Core(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Guard { .. } => "guard",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

macro_rules! core_error_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Core(e.into())
            }
        }
    )*};
}

core_error_from!(
    boxd_core::error::ComplexError,
    boxd_core::error::HomologyError,
    boxd_core::error::DesignError,
    boxd_core::error::BoxdError,
    boxd_core::error::GeometryError,
    serde_json::Error
);

/// Settings shared by every command once flags are validated.
pub(crate) struct Context {
    pub d: Option<usize>,
    pub field: FieldTag,
    pub max_vertices: usize,
}

impl Context {
    pub fn d(&self) -> Result<usize, CliError> {
        self.d.ok_or_else(|| CliError::Usage("this command needs -d <int>".into()))
    }

    pub fn guard(&self, what: &'static str, actual: usize) -> Result<(), CliError> {
        if actual > self.max_vertices {
            return Err(CliError::Guard { what, actual, limit: self.max_vertices });
        }
        Ok(())
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Pretty-printed JSON with a trailing newline. Object keys are sorted.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` and warnings to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let failure = CliError::Usage(e.to_string().trim_end().to_string());
            let _ = out.write_all(render(&failure.to_json()).as_bytes());
            return failure.exit_code();
        }
    };
    let max_vertices = match cli.flags.max_vertices {
        Some(m) => {
            if m != DEFAULT_MAX_VERTICES {
                let _ = writeln!(err, "warning: vertex guard set to {m} (default {DEFAULT_MAX_VERTICES})");
            }
            m
        }
        None => DEFAULT_MAX_VERTICES,
    };
    let ctx = Context { d: cli.flags.d, field: cli.flags.field, max_vertices };
    let result = commands::dispatch(&cli.command, &ctx).and_then(|value| {
        let text = render(&value);
        match &cli.flags.output {
            Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
            None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.write_all(render(&e.to_json()).as_bytes());
            e.exit_code()
        }
    }
}
