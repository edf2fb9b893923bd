//! 2D parameter scans: the grid of (axis1, axis2) cells is evaluated in
//! parallel, but rows are written in axis1-major grid order, so the output
//! bytes do not depend on the thread count.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use casimir_piston::boundary::bound_state_momenta;
use casimir_piston::zeta_force::casimir_force;
use casimir_piston::{PistonError, TransverseSpectrum};

use crate::config::{ConfigFile, RawParams, ScanSection};

/// One evaluated grid cell.
#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub axis1: f64,
    pub axis2: f64,
    pub force: Option<f64>,
    pub quad_err: Option<f64>,
    pub tail_bound: Option<f64>,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Norms divided out of the raw (n, q) axis entries at this grid point.
    pub outer_norm: f64,
    pub wall_norm: f64,
}

/// Scan outcome: the full cell grid plus the worst unexpected failure.
pub struct ScanOutcome {
    pub cells: Vec<Cell>,
    pub tolerance_failures: usize,
    pub hard_failures: usize,
}

fn grid_value(range: [f64; 2], steps: usize, i: usize) -> f64 {
    range[0] + (range[1] - range[0]) * i as f64 / (steps - 1) as f64
}

/// Errors that mark a cell inadmissible rather than failed: they identify
/// physically rejected configurations (bound states, negative modes, zero
/// modes), which a scan is expected to sweep over.
fn is_inadmissibility(message: &str) -> bool {
    message.contains("inadmissible") || message.contains("zero mode")
}

fn evaluate_cell(
    base: &RawParams,
    scan: &ScanSection,
    spectrum: &TransverseSpectrum,
    tol: f64,
    i: usize,
    j: usize,
) -> Cell {
    let v1 = grid_value(scan.axis1_range, scan.axis1_steps, i);
    let v2 = grid_value(scan.axis2_range, scan.axis2_steps, j);
    let mut params = *base;
    let mut cell = Cell {
        axis1: v1,
        axis2: v2,
        force: None,
        quad_err: None,
        tail_bound: None,
        admissible: false,
        error: None,
        outer_norm: 0.0,
        wall_norm: 0.0,
    };
    if let Err(e) = params
        .set(&scan.axis1, v1)
        .and_then(|_| params.set(&scan.axis2, v2))
    {
        cell.error = Some(e);
        return cell;
    }
    let built = match params.build() {
        Ok(b) => b,
        Err(e) => {
            cell.error = Some(e);
            return cell;
        }
    };
    cell.outer_norm = built.outer_norm;
    cell.wall_norm = built.wall_norm;
    let bound = bound_state_momenta(&built.config.wall);
    if !bound.is_empty() {
        cell.error = Some(format!("inadmissible: {} bound states", bound.len()));
        return cell;
    }
    match casimir_force(&built.config, spectrum, tol) {
        Ok(result) => {
            cell.force = Some(result.force);
            cell.quad_err = Some(result.quadrature_error);
            cell.tail_bound = Some(result.tail_bound);
            cell.admissible = true;
        }
        Err(e @ (PistonError::ZeroCrossing { .. }
        | PistonError::ZeroMode { .. }
        | PistonError::Inadmissible { .. })) => {
            cell.error = Some(format!("inadmissible: {e}"));
        }
        Err(e) => {
            cell.error = Some(e.to_string());
        }
    }
    cell
}

/// Evaluate the whole grid.  Cells are independent; the returned vector is in
/// axis1-major order regardless of scheduling.
pub fn run_scan(cfg: &ConfigFile, spectrum: &TransverseSpectrum, tol: f64) -> ScanOutcome {
    let scan = cfg.scan.as_ref().expect("scan section checked by caller");
    let base = RawParams::from_config(cfg);
    let n1 = scan.axis1_steps;
    let n2 = scan.axis2_steps;
    let cells: Vec<Cell> = (0..n1 * n2)
        .into_par_iter()
        .map(|idx| evaluate_cell(&base, scan, spectrum, tol, idx / n2, idx % n2))
        .collect();
    let tolerance_failures = cells
        .iter()
        .filter(|c| {
            c.error
                .as_deref()
                .is_some_and(|e| e.starts_with("tolerance not met"))
        })
        .count();
    let hard_failures = cells
        .iter()
        .filter(|c| {
            c.error.as_deref().is_some_and(|e| {
                !is_inadmissibility(e) && !e.starts_with("tolerance not met")
            })
        })
        .count();
    ScanOutcome {
        cells,
        tolerance_failures,
        hard_failures,
    }
}

/// 17-significant-digit decimal, enough to round-trip any f64.
pub fn full_precision(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    match x {
        Some(v) => full_precision(v),
        None => "NaN".to_string(),
    }
}

/// CSV with the fixed header; inadmissible cells carry NaN numeric fields.
pub fn write_csv(out: &mut dyn Write, outcome: &ScanOutcome) -> std::io::Result<()> {
    writeln!(out, "axis1,axis2,force,quad_err,tail_bound,admissible")?;
    for c in &outcome.cells {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            full_precision(c.axis1),
            full_precision(c.axis2),
            opt(c.force),
            opt(c.quad_err),
            opt(c.tail_bound),
            c.admissible
        )?;
    }
    Ok(())
}

/// JSON-lines: one cell object per line, including error records and the
/// recorded axis renormalizations.
pub fn write_json_lines(out: &mut dyn Write, outcome: &ScanOutcome) -> std::io::Result<()> {
    for c in &outcome.cells {
        let line = serde_json::to_string(c).expect("cell serialization");
        writeln!(out, "{line}")?;
    }
    Ok(())
}
