//! Command-line front end: single-point force/energy evaluation, 2D
//! parameter scans over a grid of boundary parameters, and zero-force
//! contour extraction from scan output.
//!
//! Exit codes: 0 success, 2 configuration error, 3 physics/admissibility
//! error, 4 requested tolerance not met.

mod config;
mod contour;
mod scan;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use casimir_piston::boundary::bound_state_momenta;
use casimir_piston::zeta_force::{casimir_energy_report, casimir_force};
use casimir_piston::PistonError;

use config::{load_config, ConfigFile, RawParams};

const CODE_CONFIG: u8 = 2;
const CODE_PHYSICS: u8 = 3;
const CODE_TOLERANCE: u8 = 4;

#[derive(Parser)]
#[command(name = "piston", version, about = "Casimir piston force computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one configuration and print a structured report.
    Single {
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Evaluate a 2D parameter grid and write CSV or JSON-lines.
    Scan {
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Extract zero-force curves from a scan CSV.
    Contours {
        csv: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Overrides {
    /// Requested absolute force tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Transverse spectrum cutoff.
    #[arg(long)]
    lambda_max: Option<f64>,
    /// Worker threads for scans (0 = all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Output file (default: stdout for single/contours, required path in
    /// [output] for scan unless given here).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn physics_exit_code(e: &PistonError) -> u8 {
    match e {
        PistonError::ToleranceNotMet { .. } => CODE_TOLERANCE,
        _ => CODE_PHYSICS,
    }
}

fn apply_overrides(cfg: &mut ConfigFile, ov: &Overrides) {
    if let Some(tol) = ov.tol {
        cfg.numerics.tol = tol;
    }
    if let Some(lm) = ov.lambda_max {
        cfg.numerics.lambda_max = lm;
    }
    if let Some(t) = ov.threads {
        cfg.numerics.threads = t;
    }
    if let Some(out) = &ov.out {
        cfg.output.path = Some(out.clone());
    }
}

fn write_output(path: Option<&Path>, body: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| e.to_string())
        }
    }
}

#[derive(Serialize)]
struct SingleReport<'a> {
    version: &'static str,
    config: &'a ConfigFile,
    parameters: RawParams,
    outer_norm: f64,
    wall_norm: f64,
    spectrum: SpectrumEcho,
    force: f64,
    quadrature_error: f64,
    tail_bound: f64,
    modes_used: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    energy: Option<EnergyEcho>,
}

#[derive(Serialize)]
struct SpectrumEcho {
    manifold: String,
    dimension: usize,
    lambda_max: f64,
    modes: usize,
}

#[derive(Serialize)]
struct EnergyEcho {
    pole_coefficient: f64,
    finite_part: f64,
    z_at_minus_half: f64,
    ambiguity_note: Vec<String>,
}

fn run_single(path: &Path, ov: &Overrides) -> ExitCode {
    let mut cfg = match load_config(path) {
        Ok(c) => c,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    apply_overrides(&mut cfg, ov);
    let base = path.parent().unwrap_or(Path::new("."));
    let spectrum = match config::build_spectrum(&cfg.geometry, cfg.numerics.lambda_max, base) {
        Ok(s) => s,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    let params = RawParams::from_config(&cfg);
    let built = match params.build() {
        Ok(b) => b,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    let bound = bound_state_momenta(&built.config.wall);
    if !bound.is_empty() {
        return fail(
            CODE_PHYSICS,
            &format!("inadmissible: {} bound states", bound.len()),
        );
    }
    let result = match casimir_force(&built.config, &spectrum, cfg.numerics.tol) {
        Ok(r) => r,
        Err(e) => return fail(physics_exit_code(&e), &e.to_string()),
    };
    let energy = match &cfg.zeta {
        Some(zeta) => {
            let zn = zeta.to_data(spectrum.dimension + 1);
            match casimir_energy_report(&built.config, &spectrum, &zn) {
                Ok(r) => Some(EnergyEcho {
                    pole_coefficient: r.pole_coefficient,
                    finite_part: r.finite_part,
                    z_at_minus_half: r.z_at_minus_half,
                    ambiguity_note: r.ambiguity_note,
                }),
                Err(e) => return fail(physics_exit_code(&e), &e.to_string()),
            }
        }
        None => None,
    };
    let report = SingleReport {
        version: env!("CARGO_PKG_VERSION"),
        config: &cfg,
        parameters: params,
        outer_norm: built.outer_norm,
        wall_norm: built.wall_norm,
        spectrum: SpectrumEcho {
            manifold: spectrum.manifold.clone(),
            dimension: spectrum.dimension,
            lambda_max: spectrum.lambda_max,
            modes: spectrum.modes.len(),
        },
        force: result.force,
        quadrature_error: result.quadrature_error,
        tail_bound: result.tail_bound,
        modes_used: result.modes_used,
        energy,
    };
    let body = serde_json::to_string_pretty(&report).expect("report serialization") + "\n";
    match write_output(cfg.output.path.as_deref(), &body) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(CODE_CONFIG, &e),
    }
}

fn run_scan(path: &Path, ov: &Overrides) -> ExitCode {
    let mut cfg = match load_config(path) {
        Ok(c) => c,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    apply_overrides(&mut cfg, ov);
    if cfg.scan.is_none() {
        return fail(CODE_CONFIG, "missing [scan] section");
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let spectrum = match config::build_spectrum(&cfg.geometry, cfg.numerics.lambda_max, base) {
        Ok(s) => s,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    if cfg.numerics.threads > 0 {
        // ignore failure: the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.numerics.threads)
            .build_global();
    }
    let outcome = scan::run_scan(&cfg, &spectrum, cfg.numerics.tol);
    let mut body = Vec::new();
    let write_result = match cfg.output.format.as_str() {
        "csv" => scan::write_csv(&mut body, &outcome),
        "json-lines" => scan::write_json_lines(&mut body, &outcome),
        other => return fail(CODE_CONFIG, &format!("unknown output format {other:?}")),
    };
    if let Err(e) = write_result {
        return fail(CODE_CONFIG, &e.to_string());
    }
    let body = String::from_utf8(body).expect("utf-8 output");
    if let Err(e) = write_output(cfg.output.path.as_deref(), &body) {
        return fail(CODE_CONFIG, &e);
    }
    if outcome.hard_failures > 0 {
        return fail(
            CODE_PHYSICS,
            &format!("{} grid cell(s) failed unexpectedly", outcome.hard_failures),
        );
    }
    if outcome.tolerance_failures > 0 {
        return fail(
            CODE_TOLERANCE,
            &format!(
                "{} grid cell(s) did not reach the requested tolerance",
                outcome.tolerance_failures
            ),
        );
    }
    ExitCode::SUCCESS
}

fn run_contours(csv: &Path, out: Option<&Path>) -> ExitCode {
    let grid = match contour::read_grid(csv) {
        Ok(g) => g,
        Err(e) => return fail(CODE_CONFIG, &e),
    };
    let report = contour::zero_curves(&grid);
    let body = serde_json::to_string_pretty(&report).expect("report serialization") + "\n";
    match write_output(out, &body) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(CODE_CONFIG, &e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Single { config, overrides } => run_single(config, overrides),
        Command::Scan { config, overrides } => run_scan(config, overrides),
        Command::Contours { csv, out } => run_contours(csv, out.as_deref()),
    }
}
