//! Command line front end over the analysis pipeline.
//!
//! Exit codes: 0 on success, 1 when the verification suite finds a
//! mismatch, 2 for invalid input (unknown flags, malformed files, bad
//! catalog coordinates) and 3 when a bracket table is rejected as
//! inadmissible for the structure.

use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::lie_algebra::{AlgebraError, BianchiId, BianchiType, StructureConstants};
use crate::report::{
    catalog_entries, render_catalog_text, to_pretty_json, ManifoldAnalysis, PipelineError,
};
use crate::scalar::Rational;
use crate::verify::{run_all, Fault};

#[derive(Parser)]
#[command(
    name = "acbm3",
    version,
    about = "Exact invariants of the almost contact B-metric structure on the three-dimensional Bianchi groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prints every catalog entry with its domain, geometry and class.
    Catalog(OutputArgs),
    /// Classifies a single algebra and prints its Lee forms.
    Classify(EntryArgs),
    /// Prints the full invariant report for a single algebra.
    Report(EntryArgs),
    /// Re-derives the catalog and compares it against the frozen tables.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EntryArgs {
    /// Catalog type, e.g. II, VI or VII.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "input")]
    ty: Option<String>,
    /// Subtype within the chosen type.
    #[arg(long, default_value_t = 1, conflicts_with = "input")]
    subtype: u8,
    /// Pins the family parameter to an exact rational such as -1/2.
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true, conflicts_with = "input")]
    h: Option<String>,
    /// Reads a custom bracket table from a JSON file instead of the catalog.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Runs the suite with a deliberate corruption, to prove it can fail.
    #[arg(long, value_name = "FAULT")]
    inject_fault: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum CliError {
    /// A frozen-table comparison failed; the report was already emitted.
    Verification,
    Invalid(String),
    Inadmissible(String),
}

/// Parses the process arguments, executes the chosen subcommand and
/// returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(CliError::Verification) => 1,
        Err(CliError::Invalid(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(CliError::Inadmissible(m)) => {
            eprintln!("error: {m}");
            3
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Catalog(output) => {
            let entries = catalog_entries();
            let text = match output.format {
                Format::Text => render_catalog_text(&entries),
                Format::Json => to_pretty_json(&entries),
            };
            emit(&output, text)
        }
        Command::Classify(args) => {
            let analysis = resolve(&args)?;
            let text = match args.output.format {
                Format::Text => analysis.render_classification_text(),
                Format::Json => to_pretty_json(&analysis.classify_document()),
            };
            emit(&args.output, text)
        }
        Command::Report(args) => {
            let analysis = resolve(&args)?;
            let text = match args.output.format {
                Format::Text => analysis.render_report_text(),
                Format::Json => to_pretty_json(&analysis.document()),
            };
            emit(&args.output, text)
        }
        Command::Verify(args) => {
            let fault = match &args.inject_fault {
                Some(key) => Some(key.parse::<Fault>().map_err(CliError::Invalid)?),
                None => None,
            };
            let report = run_all(fault);
            let text = match args.output.format {
                Format::Text => report.render_text(),
                Format::Json => to_pretty_json(&report),
            };
            emit(&args.output, text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Verification)
            }
        }
    }
}

fn resolve(args: &EntryArgs) -> Result<ManifoldAnalysis, CliError> {
    if let Some(path) = &args.input {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
        let algebra: StructureConstants = serde_json::from_str(&text)
            .map_err(|e| CliError::Invalid(format!("invalid bracket table: {e}")))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".to_string());
        return ManifoldAnalysis::for_custom(&name, algebra).map_err(pipeline_error);
    }

    let Some(ty) = &args.ty else {
        return Err(CliError::Invalid(
            "either --type or --input must be given".to_string(),
        ));
    };
    let ty: BianchiType = ty.parse().map_err(CliError::Invalid)?;
    let mut id = BianchiId::new(ty, args.subtype)
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    if let Some(h) = &args.h {
        let value: Rational = h
            .parse()
            .map_err(|_| CliError::Invalid(format!("invalid value for --h: `{h}`")))?;
        id = id
            .with_h(value)
            .map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    ManifoldAnalysis::for_catalog(&id).map_err(pipeline_error)
}

fn pipeline_error(e: PipelineError) -> CliError {
    match &e {
        PipelineError::Algebra(AlgebraError::JacobiFailure) => {
            CliError::Inadmissible(e.to_string())
        }
        PipelineError::Algebra(_) | PipelineError::Structure(_) => {
            CliError::Invalid(e.to_string())
        }
        PipelineError::Inadmissible(_)
        | PipelineError::Curvature(_)
        | PipelineError::Scalar(_) => CliError::Inadmissible(e.to_string()),
    }
}

fn emit(output: &OutputArgs, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
