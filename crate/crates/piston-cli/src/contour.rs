//! Zero-force curve extraction: marching squares at force = 0 over the
//! admissible cells of a scan CSV, with linear interpolation along cell
//! edges.  Segments are chained into polylines by endpoint matching.

use std::path::Path;

use serde::Serialize;

/// A scan grid reconstructed from a CSV file.
pub struct Grid {
    pub axis1: Vec<f64>,
    pub axis2: Vec<f64>,
    /// axis1-major: force[i * axis2.len() + j]; NaN where inadmissible.
    pub force: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Polyline {
    pub points: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct ContourReport {
    pub identically_zero: bool,
    pub curves: Vec<Polyline>,
}

/// Parse a CSV produced by the scan writer.  Rows must arrive in axis1-major
/// order; the axes are recovered from the leading columns.
pub fn read_grid(path: &Path) -> Result<Grid, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?;
    if header.trim() != "axis1,axis2,force,quad_err,tail_bound,admissible" {
        return Err(format!("unexpected header {header:?}"));
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(format!("line {}: expected 6 fields", lineno + 2));
        }
        let num = |s: &str| -> Result<f64, String> {
            s.trim()
                .parse::<f64>()
                .map_err(|e| format!("line {}: {e}", lineno + 2))
        };
        let admissible = fields[5].trim() == "true";
        let force = if admissible { num(fields[2])? } else { f64::NAN };
        rows.push((num(fields[0])?, num(fields[1])?, force));
    }
    if rows.is_empty() {
        return Err("no data rows".to_string());
    }
    // axis2 values repeat within each axis1 block
    let n2 = rows
        .iter()
        .position(|r| r.0 != rows[0].0)
        .unwrap_or(rows.len());
    if rows.len() % n2 != 0 {
        return Err("ragged grid".to_string());
    }
    let n1 = rows.len() / n2;
    let axis1: Vec<f64> = (0..n1).map(|i| rows[i * n2].0).collect();
    let axis2: Vec<f64> = (0..n2).map(|j| rows[j].1).collect();
    for (idx, r) in rows.iter().enumerate() {
        if r.0 != axis1[idx / n2] || r.1 != axis2[idx % n2] {
            return Err(format!("row {} breaks axis1-major ordering", idx + 2));
        }
    }
    Ok(Grid {
        axis1,
        axis2,
        force: rows.into_iter().map(|r| r.2).collect(),
    })
}

/// Relative threshold below which the whole grid counts as identically zero.
const ZERO_GRID_TOL: f64 = 1e-12;

fn interp(a: f64, b: f64, fa: f64, fb: f64) -> f64 {
    a + (b - a) * (fa / (fa - fb))
}

/// Marching squares at level 0.  Cells touching an inadmissible corner are
/// skipped; corner value 0 is treated as positive so every crossing is found
/// exactly once.
pub fn zero_curves(grid: &Grid) -> ContourReport {
    let n1 = grid.axis1.len();
    let n2 = grid.axis2.len();
    let f = |i: usize, j: usize| grid.force[i * n2 + j];

    let max_abs = grid
        .force
        .iter()
        .filter(|v| v.is_finite())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    if max_abs <= ZERO_GRID_TOL {
        return ContourReport {
            identically_zero: true,
            curves: Vec::new(),
        };
    }

    let mut segments: Vec<([f64; 2], [f64; 2])> = Vec::new();
    for i in 0..n1.saturating_sub(1) {
        for j in 0..n2.saturating_sub(1) {
            let corners = [f(i, j), f(i + 1, j), f(i + 1, j + 1), f(i, j + 1)];
            if corners.iter().any(|v| !v.is_finite()) {
                continue;
            }
            let (x0, x1) = (grid.axis1[i], grid.axis1[i + 1]);
            let (y0, y1) = (grid.axis2[j], grid.axis2[j + 1]);
            // edge order: bottom (y = y0), right (x = x1), top (y = y1),
            // left (x = x0)
            let mut crossings: Vec<[f64; 2]> = Vec::new();
            let edge = |fa: f64, fb: f64| (fa >= 0.0) != (fb >= 0.0);
            if edge(corners[0], corners[1]) {
                crossings.push([interp(x0, x1, corners[0], corners[1]), y0]);
            }
            if edge(corners[1], corners[2]) {
                crossings.push([x1, interp(y0, y1, corners[1], corners[2])]);
            }
            if edge(corners[3], corners[2]) {
                crossings.push([interp(x0, x1, corners[3], corners[2]), y1]);
            }
            if edge(corners[0], corners[3]) {
                crossings.push([x0, interp(y0, y1, corners[0], corners[3])]);
            }
            // 0 or 2 crossings generically; the saddle case yields 4, split
            // by pairing in edge order
            let mut it = crossings.chunks_exact(2);
            for pair in &mut it {
                segments.push((pair[0], pair[1]));
            }
        }
    }
    ContourReport {
        identically_zero: false,
        curves: chain_segments(segments),
    }
}

fn close(a: [f64; 2], b: [f64; 2]) -> bool {
    let scale = a[0].abs().max(a[1].abs()).max(1.0);
    (a[0] - b[0]).abs() + (a[1] - b[1]).abs() < 1e-12 * scale
}

/// Greedy endpoint chaining of unordered segments into polylines.
fn chain_segments(mut segments: Vec<([f64; 2], [f64; 2])>) -> Vec<Polyline> {
    let mut curves = Vec::new();
    while let Some((a, b)) = segments.pop() {
        let mut points = vec![a, b];
        loop {
            let tail = *points.last().unwrap();
            let head = points[0];
            if let Some(k) = segments
                .iter()
                .position(|s| close(s.0, tail) || close(s.1, tail))
            {
                let (p, q) = segments.swap_remove(k);
                points.push(if close(p, tail) { q } else { p });
            } else if let Some(k) = segments
                .iter()
                .position(|s| close(s.0, head) || close(s.1, head))
            {
                let (p, q) = segments.swap_remove(k);
                points.insert(0, if close(p, head) { q } else { p });
            } else {
                break;
            }
        }
        curves.push(Polyline { points });
    }
    curves
}
