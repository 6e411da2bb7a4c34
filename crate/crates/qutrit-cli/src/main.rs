//! `qutrit` command-line tool: state classification, section geometry and
//! seeded sampling on top of `qutrit-core`.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 the input is not a
//! physical state (the report is still emitted), 3 verification mismatch.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use qutrit_core::sections::{
    boundary_cloud, cataloged_sections, enumerate_sections, expected_pure_states,
    find_pure_states, section_class, section_report, verify_catalog, PureSearchConfig, SectionId,
};
use qutrit_core::{random_mixed, random_pure, random_rank2, PurityClass, RngStream};

mod io;

use io::{
    cloud_csv, to_json_line, AtlasEntryDoc, CloudDoc, ExpectedPureDoc, FamilyDoc, ReportDocument,
    SectionReportDoc, SolutionDoc, StateDocument, VerificationDoc,
};

/// Coordinate tolerance when matching located pure states against the
/// embedded reference data.
const VERIFY_COORD_TOL: f64 = 1e-6;

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }

    fn from_core(err: qutrit_core::Error) -> Self {
        Self {
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "qutrit", version, about = "Qutrit state-space toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state document and print the full invariant report
    Classify {
        /// Path to a JSON state document, or '-' for stdin
        input: String,
        /// Classification tolerance (default 1e-9, or QUTRIT_TOL)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Section geometry: boundary clouds, pure states, point reports
    Section {
        #[command(subcommand)]
        command: SectionCommand,
    },
    /// Shape-class catalog of all sections of one order
    Atlas {
        /// Section order (2 or 3)
        #[arg(long)]
        k: usize,
        /// Re-locate the pure states of the reference sections and compare
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit seeded random states as newline-delimited matrix documents
    Sample {
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SectionCommand {
    /// Extract the boundary point cloud of a section
    Boundary {
        /// Comma-separated axes, e.g. 1,2,8
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<u8>,
        /// Grid points per axis (default 201 for order <= 2, 61 for order 3)
        #[arg(long)]
        resolution: Option<usize>,
        /// Ray count for orders >= 4 (default 10000)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerically locate the pure states of a section
    Pure {
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<u8>,
        /// Grid seeds per axis for orders <= 3 (default 41)
        #[arg(long)]
        resolution: Option<usize>,
        /// Random starts for orders >= 4 (default 20000)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Purity-residual tolerance (default 1e-8, or QUTRIT_TOL)
        #[arg(long)]
        tol: Option<f64>,
        /// Compare against the embedded reference data; exit 3 on mismatch
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariants and vector squares at one section point
    Report {
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<u8>,
        /// Comma-separated section coordinates
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        coords: Vec<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Pure,
    Mixed,
    Rank2,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Classify { input, tol } => classify(&input, resolve_tol(tol, 1e-9)?),
        Command::Section { command } => section(command),
        Command::Atlas { k, verify, out } => atlas(k, verify, out.as_deref()),
        Command::Sample { kind, n, seed, out } => sample(kind, n, seed, out.as_deref()),
    }
}

/// An explicit flag wins over the QUTRIT_TOL environment variable, which in
/// turn overrides the built-in default.
fn resolve_tol(flag: Option<f64>, default: f64) -> Result<f64, CliError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("QUTRIT_TOL") {
        Ok(raw) => {
            let t: f64 = raw
                .parse()
                .map_err(|_| CliError::new(format!("QUTRIT_TOL is not a number: {raw:?}")))?;
            if !t.is_finite() || t <= 0.0 {
                return Err(CliError::new(format!("QUTRIT_TOL must be positive: {raw}")));
            }
            Ok(t)
        }
        Err(_) => Ok(default),
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::new(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| CliError::new(format!("cannot read {path}: {e}")))
    }
}

fn write_output(out: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::new(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn classify(input: &str, tol: f64) -> Result<u8, CliError> {
    let bytes = read_input(input)?;
    let doc = StateDocument::parse(&bytes)?;
    let rho = doc.to_matrix(tol)?;
    let report = ReportDocument::build(&rho, tol);
    println!("{}", to_json_line(&report));
    if rho.classify(tol) == PurityClass::NotAState {
        Ok(2)
    } else {
        Ok(0)
    }
}

fn section(command: SectionCommand) -> Result<u8, CliError> {
    match command {
        SectionCommand::Boundary {
            axes,
            resolution,
            samples,
            seed,
            format,
            out,
        } => {
            let id = SectionId::new(&axes).map_err(CliError::from_core)?;
            let resolution = resolution.unwrap_or(if id.k() <= 2 { 201 } else { 61 });
            let samples = samples.unwrap_or(10_000);
            let cloud = boundary_cloud(&id, resolution, samples, seed);
            let content = match format {
                OutputFormat::Json => format!("{}\n", to_json_line(&CloudDoc::build(&cloud))),
                OutputFormat::Csv => cloud_csv(&cloud),
            };
            write_output(out.as_deref(), &content)?;
            Ok(0)
        }
        SectionCommand::Pure {
            axes,
            resolution,
            samples,
            seed,
            tol,
            verify,
            out,
        } => {
            let id = SectionId::new(&axes).map_err(CliError::from_core)?;
            let cfg = PureSearchConfig {
                grid_per_axis: resolution.unwrap_or(41),
                starts: samples.unwrap_or(20_000),
                seed,
                tol: resolve_tol(tol, 1e-8)?,
            };
            if verify {
                let report = verify_catalog(&id, VERIFY_COORD_TOL).map_err(CliError::from_core)?;
                let doc = VerificationDoc::build(&report);
                write_output(out.as_deref(), &format!("{}\n", to_json_line(&doc)))?;
                return Ok(if report.matched() { 0 } else { 3 });
            }
            let solutions = find_pure_states(&id, &cfg);
            let docs: Vec<SolutionDoc> = solutions.iter().map(SolutionDoc::build).collect();
            write_output(out.as_deref(), &format!("{}\n", to_json_line(&docs)))?;
            Ok(0)
        }
        SectionCommand::Report { axes, coords, out } => {
            let id = SectionId::new(&axes).map_err(CliError::from_core)?;
            let report = section_report(&id, &coords).map_err(CliError::from_core)?;
            let doc = SectionReportDoc::build(&report);
            write_output(out.as_deref(), &format!("{}\n", to_json_line(&doc)))?;
            Ok(0)
        }
    }
}

fn atlas(k: usize, verify: bool, out: Option<&std::path::Path>) -> Result<u8, CliError> {
    if k != 2 && k != 3 {
        return Err(CliError::new(format!(
            "atlas supports orders 2 and 3, got {k}"
        )));
    }
    let verified: Vec<SectionId> = if verify { cataloged_sections(k) } else { Vec::new() };
    let mut mismatch = false;
    let mut entries = Vec::new();
    for id in enumerate_sections(k).map_err(CliError::from_core)? {
        let expected_pure = expected_pure_states(&id).map(|(isolated, family)| ExpectedPureDoc {
            isolated,
            family: family.map(|f| FamilyDoc {
                fixed_axis: id.axes()[f.fixed_index],
                fixed_value: f.fixed_value,
                radius_sq: f.radius_sq,
            }),
        });
        let found_pure = if verified.contains(&id) {
            let report = verify_catalog(&id, VERIFY_COORD_TOL).map_err(CliError::from_core)?;
            mismatch |= !report.matched();
            Some(VerificationDoc::build(&report))
        } else {
            None
        };
        entries.push(AtlasEntryDoc {
            axes: id.axes().to_vec(),
            class: section_class(&id).to_string(),
            expected_pure,
            found_pure,
        });
    }
    write_output(out, &format!("{}\n", to_json_line(&entries)))?;
    Ok(if mismatch { 3 } else { 0 })
}

fn sample(
    kind: SampleKind,
    n: usize,
    seed: u64,
    out: Option<&std::path::Path>,
) -> Result<u8, CliError> {
    if n == 0 {
        return Err(CliError::new("sample count must be at least 1"));
    }
    let mut rng = RngStream::new(seed);
    let mut content = String::new();
    for _ in 0..n {
        let rho = match kind {
            SampleKind::Pure => random_pure(&mut rng),
            SampleKind::Mixed => random_mixed(&mut rng),
            SampleKind::Rank2 => random_rank2(&mut rng),
        };
        content.push_str(&to_json_line(&StateDocument::from_matrix(&rho)));
        content.push('\n');
    }
    write_output(out, &content)?;
    Ok(0)
}
