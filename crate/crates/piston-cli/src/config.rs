//! Text configuration: sections [geometry], [outer], [wall], [numerics],
//! [scan], [output], [zeta], with keys named after the paper's symbols
//! (θ, γ, q for the wall; α, β, n for the outer pair).
//!
//! Unit-vector components are taken raw and re-normalized; the recorded norm
//! lets a reader audit what was actually used.  A zero vector is only an
//! error when the mix angle makes the axis matter.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use casimir_piston::boundary::BoundaryUnitary;
use casimir_piston::spectra::{
    disk_spectrum, load_spectrum, point_spectrum, sphere_spectrum, TransverseSpectrum,
};
use casimir_piston::{PistonConfig, ZetaNData};

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    #[serde(rename = "L")]
    pub length: f64,
    pub a: f64,
    /// "point" | "sphere" | "disk" | "file"
    #[serde(default = "default_manifold")]
    pub manifold: String,
    /// d for "sphere"; intrinsic dimension for "file".
    #[serde(default)]
    pub dimension: Option<usize>,
    #[serde(default)]
    pub spectrum_file: Option<PathBuf>,
}

fn default_manifold() -> String {
    "point".to_string()
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OuterSection {
    pub alpha: f64,
    pub beta: f64,
    #[serde(default)]
    pub n1: f64,
    #[serde(default)]
    pub n2: f64,
    #[serde(default)]
    pub n3: f64,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WallSection {
    pub theta: f64,
    pub gamma: f64,
    #[serde(default)]
    pub q1: f64,
    #[serde(default)]
    pub q2: f64,
    #[serde(default)]
    pub q3: f64,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct NumericsSection {
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_lambda_max")]
    pub lambda_max: f64,
    /// 0 = use all available cores.
    #[serde(default)]
    pub threads: usize,
}

fn default_tol() -> f64 {
    1e-8
}

fn default_lambda_max() -> f64 {
    40.0
}

impl Default for NumericsSection {
    fn default() -> Self {
        NumericsSection {
            tol: default_tol(),
            lambda_max: default_lambda_max(),
            threads: 0,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSection {
    pub axis1: String,
    pub axis1_range: [f64; 2],
    pub axis1_steps: usize,
    pub axis2: String,
    pub axis2_range: [f64; 2],
    pub axis2_steps: usize,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default)]
    pub path: Option<PathBuf>,
    /// "csv" | "json-lines"
    #[serde(default = "default_format")]
    pub format: String,
}

fn default_format() -> String {
    "csv".to_string()
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection {
            path: None,
            format: default_format(),
        }
    }
}

/// Meromorphic ζ_N inputs for the energy decomposition (optional).
#[derive(Debug, Clone, Deserialize, Serialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ZetaSection {
    /// Shortcut for the trivial (point) cross section.
    #[serde(default)]
    pub trivial: bool,
    #[serde(default)]
    pub zeta_minus1: f64,
    #[serde(default)]
    pub zeta_prime_minus1: f64,
    #[serde(default)]
    pub zeta_0: f64,
    #[serde(default)]
    pub zeta_prime_0: f64,
    /// Rows [index, residue, finite part] of ζ_N at s = (index − 1)/2.
    #[serde(default)]
    pub half_points: Vec<[f64; 3]>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub geometry: GeometrySection,
    pub outer: OuterSection,
    pub wall: WallSection,
    #[serde(default)]
    pub numerics: NumericsSection,
    #[serde(default)]
    pub scan: Option<ScanSection>,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub zeta: Option<ZetaSection>,
}

/// Scalar parameters of one grid point, before unitaries are assembled.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RawParams {
    pub length: f64,
    pub a: f64,
    pub alpha: f64,
    pub beta: f64,
    pub n: [f64; 3],
    pub theta: f64,
    pub gamma: f64,
    pub q: [f64; 3],
}

/// Scannable parameter names.
pub const PARAM_NAMES: [&str; 12] = [
    "a", "alpha", "beta", "theta", "gamma", "n1", "n2", "n3", "q1", "q2", "q3", "L",
];

impl RawParams {
    pub fn from_config(cfg: &ConfigFile) -> Self {
        RawParams {
            length: cfg.geometry.length,
            a: cfg.geometry.a,
            alpha: cfg.outer.alpha,
            beta: cfg.outer.beta,
            n: [cfg.outer.n1, cfg.outer.n2, cfg.outer.n3],
            theta: cfg.wall.theta,
            gamma: cfg.wall.gamma,
            q: [cfg.wall.q1, cfg.wall.q2, cfg.wall.q3],
        }
    }

    pub fn set(&mut self, name: &str, value: f64) -> Result<(), String> {
        match name {
            "a" => self.a = value,
            "alpha" => self.alpha = value,
            "beta" => self.beta = value,
            "theta" => self.theta = value,
            "gamma" => self.gamma = value,
            "n1" => self.n[0] = value,
            "n2" => self.n[1] = value,
            "n3" => self.n[2] = value,
            "q1" => self.q[0] = value,
            "q2" => self.q[1] = value,
            "q3" => self.q[2] = value,
            "L" => self.length = value,
            _ => {
                return Err(format!(
                    "unknown scan parameter {name:?} (expected one of {PARAM_NAMES:?})"
                ))
            }
        }
        Ok(())
    }
}

/// A built grid point: the library configuration plus the axis norms that
/// were divided out.
pub struct BuiltPoint {
    pub config: PistonConfig,
    pub outer_norm: f64,
    pub wall_norm: f64,
}

fn build_unitary(phase: f64, mix: f64, axis: [f64; 3], label: &str) -> Result<(BoundaryUnitary, f64), String> {
    let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    let axis = if norm > 0.0 {
        [axis[0] / norm, axis[1] / norm, axis[2] / norm]
    } else if mix.sin().abs() < 1e-15 {
        // axis irrelevant when sin(mix) = 0
        [0.0, 0.0, 1.0]
    } else {
        return Err(format!("{label}: zero axis vector with sin(mix) != 0"));
    };
    let u = BoundaryUnitary::new(phase, mix, axis).map_err(|e| format!("{label}: {e}"))?;
    Ok((u, norm))
}

impl RawParams {
    /// Assemble a library configuration, normalizing the axis vectors.
    /// Admissibility is *not* checked here: scan cells with bound-state walls
    /// are recorded, not fatal, so the gate belongs to the caller.
    pub fn build(&self) -> Result<BuiltPoint, String> {
        let (outer, outer_norm) = build_unitary(self.alpha, self.beta, self.n, "outer")?;
        let (wall, wall_norm) = build_unitary(self.theta, self.gamma, self.q, "wall")?;
        let config = PistonConfig::new_diagnostic(outer, wall, self.length, self.a)
            .map_err(|e| e.to_string())?;
        Ok(BuiltPoint {
            config,
            outer_norm,
            wall_norm,
        })
    }
}

/// Build the transverse spectrum named by the [geometry] section.
pub fn build_spectrum(
    geometry: &GeometrySection,
    lambda_max: f64,
    base: &Path,
) -> Result<TransverseSpectrum, String> {
    match geometry.manifold.as_str() {
        "point" => Ok(point_spectrum()),
        "sphere" => {
            let d = geometry
                .dimension
                .ok_or("geometry.dimension required for manifold = \"sphere\"")?;
            Ok(sphere_spectrum(d, lambda_max))
        }
        "disk" => disk_spectrum(lambda_max).map_err(|e| e.to_string()),
        "file" => {
            let rel = geometry
                .spectrum_file
                .as_ref()
                .ok_or("geometry.spectrum_file required for manifold = \"file\"")?;
            let d = geometry
                .dimension
                .ok_or("geometry.dimension required for manifold = \"file\"")?;
            let path = if rel.is_absolute() {
                rel.clone()
            } else {
                base.join(rel)
            };
            load_spectrum(&path, d).map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown manifold {other:?} (expected point, sphere, disk, or file)"
        )),
    }
}

impl ZetaSection {
    pub fn to_data(&self, dim_total: usize) -> ZetaNData {
        if self.trivial {
            return ZetaNData::trivial(dim_total);
        }
        let mut half_points = BTreeMap::new();
        for row in &self.half_points {
            half_points.insert(row[0] as usize, (row[1], row[2]));
        }
        ZetaNData {
            zeta_minus1: self.zeta_minus1,
            zeta_prime_minus1: self.zeta_prime_minus1,
            zeta_0: self.zeta_0,
            zeta_prime_0: self.zeta_prime_0,
            half_points,
        }
    }
}

/// Parse a config file, mapping any parse failure to a key-naming message.
pub fn load_config(path: &Path) -> Result<ConfigFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let cfg: ConfigFile = toml::from_str(&text).map_err(|e| e.to_string())?;
    if !(cfg.numerics.tol > 0.0) {
        return Err("numerics.tol must be positive".to_string());
    }
    if !(cfg.numerics.lambda_max > 0.0) {
        return Err("numerics.lambda_max must be positive".to_string());
    }
    if let Some(scan) = &cfg.scan {
        for (name, steps) in [(&scan.axis1, scan.axis1_steps), (&scan.axis2, scan.axis2_steps)] {
            if !PARAM_NAMES.contains(&name.as_str()) {
                return Err(format!(
                    "scan axis {name:?} is not a parameter (expected one of {PARAM_NAMES:?})"
                ));
            }
            if steps < 2 {
                return Err(format!("scan axis {name:?}: steps must be at least 2"));
            }
        }
    }
    Ok(cfg)
}
