//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 invariant violation, 2 invalid geometry,
//! 64 usage error, 74 output I/O failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use quadsq_core::sweep::{self, Execution, Mode, Tolerances};
use quadsq_core::{GeomError, Point};
use serde::Serialize;

use crate::input::{load_vertex_file, parse_points, InputError};
use crate::render::{render, ColorMap, Stage};
use crate::report::{compound, derive_report, hexagon_report, squares_report, tolerance_from_env};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_GEOMETRY: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "quadsq",
    version,
    about = "Parallelograms and squares from rotation fixed points of a quadrilateral"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct PolygonInput {
    /// Vertices as X,Y pairs; coordinates may be ratios like 1/2.
    #[arg(long, num_args = 1.., value_name = "X,Y")]
    points: Option<Vec<String>>,
    /// JSON file of the form {"vertices": [[x, y], ...]}.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

impl PolygonInput {
    fn vertices<const N: usize>(&self) -> Result<[Point; N], InputError> {
        match (&self.points, &self.input) {
            (Some(p), _) => parse_points(p),
            (None, Some(path)) => load_vertex_file(path),
            (None, None) => unreachable!("clap enforces one input source"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ModeArg {
    Quad,
    Parallelogram,
    Hexagon,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Quad => Mode::Quad,
            ModeArg::Parallelogram => Mode::Parallelogram,
            ModeArg::Hexagon => Mode::Hexagon,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Six derived parallelograms and their congruences (JSON).
    Derive {
        #[command(flatten)]
        input: PolygonInput,
    },
    /// The 24 squares of the two-stage construction (JSON).
    Squares {
        #[command(flatten)]
        input: PolygonInput,
    },
    /// Write an SVG figure.
    Render {
        #[command(flatten)]
        input: PolygonInput,
        /// Output SVG path.
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "parallelograms")]
        stage: Stage,
        /// Colour override, `input=COLOR` or `LABEL=COLOR` such as `(23)=orange`.
        #[arg(long = "color", value_name = "KEY=COLOR")]
        colors: Vec<String>,
    },
    /// Quarter-angle b-points and the hexagon identities (JSON).
    Hexagon {
        #[command(flatten)]
        input: PolygonInput,
    },
    /// Seeded verification sweep (JSON summary).
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "quad")]
        mode: ModeArg,
        /// Run cases on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Usage(String),
    Geometry(GeomError),
    Io(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::Geometry(e)
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::Io(e.to_string()))
}

fn status(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn dispatch(
    command: Command,
    tol: f64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, Failure> {
    match command {
        Command::Derive { input } => {
            let r = derive_report(input.vertices()?, tol)?;
            emit(out, &r)?;
            Ok(status(r.ok))
        }
        Command::Squares { input } => {
            let r = squares_report(input.vertices()?, compound(tol))?;
            emit(out, &r)?;
            Ok(status(r.ok))
        }
        Command::Render {
            input,
            output,
            stage,
            colors,
        } => {
            let mut map = ColorMap::for_stage(stage);
            for c in &colors {
                map.apply_override(c).map_err(Failure::Usage)?;
            }
            let stage_tol = match stage {
                Stage::Parallelograms => tol,
                Stage::Squares => compound(tol),
            };
            let svg = render(input.vertices()?, stage, &map, stage_tol)?;
            std::fs::write(&output, svg)
                .map_err(|e| Failure::Io(format!("{}: {e}", output.display())))?;
            Ok(EXIT_OK)
        }
        Command::Hexagon { input } => {
            let r = hexagon_report(input.vertices()?, compound(tol))?;
            emit(out, &r)?;
            Ok(status(r.ok))
        }
        Command::Verify {
            count,
            seed,
            mode,
            sequential,
        } => {
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let summary = sweep::run(mode.into(), seed, count, Tolerances::with_rel(tol), exec);
            emit(out, &summary)?;
            for f in summary.families.iter().filter(|f| !f.passed) {
                let _ = writeln!(
                    err,
                    "violation: {} max residual {:e} > {:e}; seeds {:?}",
                    f.name, f.max_residual, f.tolerance, f.violations
                );
            }
            if !summary.sampling_failures.is_empty() {
                let _ = writeln!(
                    err,
                    "sampling failed for seeds {:?}",
                    summary.sampling_failures
                );
            }
            Ok(status(summary.passed))
        }
    }
}

/// Negative coordinate pairs such as `-1,2` would otherwise be read as
/// short flags. A leading space keeps them values; coordinates are trimmed.
fn shield_negative_pairs(arg: OsString) -> OsString {
    match arg.to_str() {
        Some(s)
            if s.len() > 1
                && s.starts_with('-')
                && s[1..].starts_with(|c: char| c.is_ascii_digit() || c == '.') =>
        {
            format!(" {s}").into()
        }
        _ => arg,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = args.into_iter().map(|a| shield_negative_pairs(a.into()));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let tol = match tolerance_from_env() {
        Ok(t) => t,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, tol, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Geometry(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_invalid_geometry() {
                EXIT_GEOMETRY
            } else {
                EXIT_VIOLATION
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}
