//! Argument definitions and command dispatch.
//!
//! Exit codes: 0 success, 1 a failed check or degenerate configuration,
//! 2 invalid input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use pedal_geometry::theorems::{build_scene, catalog_ids, lookup, run_suite, Scene, TrialConfig, CATALOG};
use pedal_geometry::Tolerance;

use crate::document::{ReportDocument, SceneDocument};
use crate::input::{parse_triangle, InputError, PointSpec};
use crate::svg::{parse_layers, render_svg, Layer};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "pedal", version, about = "Pedal-triangle constructions, checks and figures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run randomized residual checks.
    Verify(VerifyArgs),
    /// Build one configuration and print it as JSON.
    Construct(SceneArgs),
    /// Build one configuration and write an SVG figure.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check id or name; repeat for several. Defaults to every check.
    #[arg(long = "check")]
    pub checks: Vec<String>,
    #[arg(long, default_value_t = 200)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Absolute residual tolerance.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    /// Print one JSON report per line instead of a table.
    #[arg(long)]
    pub json: bool,
    /// List the registered checks and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct SceneArgs {
    /// Vertices as "x1,y1 x2,y2 x3,y3".
    #[arg(long)]
    pub triangle: String,
    /// "px,py", "bevan", "incenter" or "io:t" for I + t(O - I).
    #[arg(long)]
    pub point: String,
    /// Offset distance along the sidelines.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[command(flatten)]
    pub scene: SceneArgs,
    /// Output file.
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
    /// Comma-separated layers; the triangle is always drawn.
    #[arg(long, default_value = "")]
    pub show: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Construct(args) => cmd_construct(&args, out, err),
        Command::Figure(args) => cmd_figure(&args, out, err),
    }
}

fn usage(err: &mut dyn Write, e: impl std::fmt::Display) -> u8 {
    let _ = writeln!(err, "error: {e}");
    EXIT_USAGE
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    if args.list {
        let _ = writeln!(out, "{}", check_listing());
        return EXIT_OK;
    }
    if args.trials == 0 {
        return usage(err, "--trials must be at least 1");
    }
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return usage(err, "--tol must be a positive number");
    }
    let cfg = match TrialConfig::default()
        .with_seed(args.seed)
        .with_trials(args.trials)
        .with_abs_tol(args.tol)
    {
        Ok(cfg) => cfg,
        Err(e) => return usage(err, e),
    };
    let ids: Vec<&str> = if args.checks.is_empty() {
        catalog_ids()
    } else {
        args.checks.iter().map(String::as_str).collect()
    };
    let reports = match run_suite(&ids, &cfg) {
        Ok(r) => r,
        Err(e) => return usage(err, e),
    };
    if args.json {
        for r in &reports {
            let _ = writeln!(out, "{}", ReportDocument::from(r).to_json_line());
        }
    } else {
        let _ = writeln!(
            out,
            "{:<5} {:<24} {:>7} {:>7} {:>12} {:>9}  result",
            "id", "name", "trials", "skipped", "max_resid", "tol"
        );
        for r in &reports {
            let name = lookup(&r.id).map(|c| c.name).unwrap_or("");
            let _ = writeln!(
                out,
                "{:<5} {:<24} {:>7} {:>7} {:>12.3e} {:>9.1e}  {}",
                r.id,
                name,
                r.trials,
                r.skipped,
                r.max_residual,
                r.tolerance,
                if r.passed { "pass".to_string() } else { format!("FAIL ({})", r.failures.len()) }
            );
            for f in r.failures.iter().take(3) {
                let _ = writeln!(out, "      trial {}: {:.3e} {}", f.index, f.residual, f.detail);
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// Builds the scene, or reports why not: input problems are exit 2,
/// degenerate configurations exit 1 with the error name.
fn scene_from_args(args: &SceneArgs, err: &mut dyn Write) -> Result<Scene, u8> {
    let triangle = parse_triangle(&args.triangle).map_err(|e| usage(err, e))?;
    let spec: PointSpec = args.point.parse().map_err(|e: InputError| usage(err, e))?;
    if !args.x.is_finite() || args.x < 0.0 {
        return Err(usage(err, "--x must be a finite, non-negative number"));
    }
    let p = spec.resolve(&triangle).map_err(|e| {
        let _ = writeln!(err, "{}: {e}", e.name());
        EXIT_FAIL
    })?;
    build_scene(&triangle, &p, args.x, &Tolerance::default()).map_err(|e| {
        let _ = writeln!(err, "{}: {e}", e.name());
        EXIT_FAIL
    })
}

pub fn cmd_construct(args: &SceneArgs, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match scene_from_args(args, err) {
        Ok(scene) => {
            let _ = writeln!(out, "{}", SceneDocument::from_scene(&scene).to_json());
            EXIT_OK
        }
        Err(code) => code,
    }
}

pub fn cmd_figure(args: &FigureArgs, _out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let mut layers: BTreeSet<Layer> = match parse_layers(&args.show) {
        Ok(l) => l,
        Err(e) => return usage(err, e),
    };
    layers.insert(Layer::Triangle);
    let scene = match scene_from_args(&args.scene, err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let svg = render_svg(&scene, &layers);
    match std::fs::write(&args.output, svg) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "cannot write {}: {e}", args.output.display());
            EXIT_FAIL
        }
    }
}

/// Registered check ids with their names, one per line.
pub fn check_listing() -> String {
    CATALOG.iter().map(|c| format!("{} {}", c.id, c.name)).collect::<Vec<_>>().join("\n")
}
