//! Boundary unitaries and the piston configuration.
//!
//! A self-adjoint extension of the longitudinal operator is fixed by two U(2)
//! elements: one coupling the two chamber ends (`outer`, angles α, β, axis n)
//! and one coupling the two faces of the piston wall (`wall`, angles θ, γ,
//! axis q).  Each is stored in Euler coordinates
//!
//!   U = e^{i·phase} [ I cos(mix) + i sin(mix) (v₁σ₁ + v₂σ₂ + v₃σ₃) ].
//!
//! The wall admits bound states with imaginary momenta κ± = −tan((θ±γ)/2);
//! a configuration is admissible (yields a well-defined field theory) only when
//! no strictly positive κ exists.

use num_complex::Complex64;

use crate::error::{PistonError, Result};
use crate::util::{snap_angle, snap_trig, SnappedTrig};

use std::f64::consts::{FRAC_PI_2, PI};

/// κ values this close to zero are reported as a zero-mode flag instead of a
/// bound state.
const ZERO_MODE_TOL: f64 = 1e-12;

/// Euler-coordinate U(2) element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryUnitary {
    phase: f64,
    mix: f64,
    axis: [f64; 3],
}

impl BoundaryUnitary {
    /// Build a boundary unitary, canonicalizing the angles and normalizing the
    /// axis.  The axis may be any nonzero vector; it is irrelevant (and
    /// defaulted to ẑ) when sin(mix) = 0.
    pub fn new(phase: f64, mix: f64, axis: [f64; 3]) -> Result<Self> {
        let mut phase = snap_angle(phase);
        let mut mix = snap_angle(mix);
        // mix lives in [-pi/2, pi/2]: shifting it by pi flips the overall sign,
        // which a phase shift of pi absorbs.
        if mix > FRAC_PI_2 {
            mix -= PI;
            phase = snap_angle(phase + PI);
        } else if mix < -FRAC_PI_2 {
            mix += PI;
            phase = snap_angle(phase + PI);
        }
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let axis = if norm < 1e-300 {
            if snap_trig(mix).sin != 0.0 {
                return Err(PistonError::InvalidParameter(
                    "axis must be nonzero when sin(mix) != 0".into(),
                ));
            }
            [0.0, 0.0, 1.0]
        } else {
            [axis[0] / norm, axis[1] / norm, axis[2] / norm]
        };
        Ok(Self { phase, mix, axis })
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn mix(&self) -> f64 {
        self.mix
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    /// Snapped cos/sin of the phase angle.
    pub fn phase_trig(&self) -> SnappedTrig {
        snap_trig(self.phase)
    }

    /// Snapped cos/sin of the mixing angle.
    pub fn mix_trig(&self) -> SnappedTrig {
        snap_trig(self.mix)
    }
}

/// The 2×2 matrix of a boundary unitary, row-major.
pub fn unitary_matrix(u: &BoundaryUnitary) -> [[Complex64; 2]; 2] {
    let p = u.phase_trig();
    let m = u.mix_trig();
    let e = Complex64::new(p.cos, p.sin);
    let [v1, v2, v3] = u.axis;
    let c = Complex64::new(m.cos, 0.0);
    let is = Complex64::new(0.0, m.sin);
    // I cos + i sin (v1 s1 + v2 s2 + v3 s3)
    let u01 = e * is * Complex64::new(v1, -v2);
    let u10 = e * is * Complex64::new(v1, v2);
    [[e * (c + is * v3), u01], [u10, e * (c - is * v3)]]
}

/// Number of wall bound states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStateCount {
    NoBoundStates,
    OneBoundState,
    TwoBoundStates,
}

/// Result of [`classify_extension`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionClass {
    pub count: BoundStateCount,
    /// κ = 0 occurred: the extension has a boundary zero mode but is still
    /// non-negative, hence admissible.
    pub zero_mode: bool,
}

fn kappa_candidates(wall: &BoundaryUnitary) -> [Option<f64>; 2] {
    let theta = wall.phase();
    let gamma = wall.mix();
    let mut out = [None, None];
    for (slot, arg) in out.iter_mut().zip([
        snap_angle((theta + gamma) / 2.0),
        snap_angle((theta - gamma) / 2.0),
    ]) {
        // at arg = ±pi/2 the candidate escapes to ∓∞: no finite bound state
        let t = snap_trig(arg);
        if t.cos == 0.0 {
            *slot = None;
        } else {
            *slot = Some(-t.sin / t.cos);
        }
    }
    out
}

/// Strictly positive, finite bound-state momenta of the wall, sorted ascending.
pub fn bound_state_momenta(wall: &BoundaryUnitary) -> Vec<f64> {
    let mut ks: Vec<f64> = kappa_candidates(wall)
        .into_iter()
        .flatten()
        .filter(|&k| k > ZERO_MODE_TOL)
        .collect();
    ks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ks
}

/// Classify the wall extension by bound-state count, with a separate zero-mode flag.
pub fn classify_extension(wall: &BoundaryUnitary) -> ExtensionClass {
    let count = match bound_state_momenta(wall).len() {
        0 => BoundStateCount::NoBoundStates,
        1 => BoundStateCount::OneBoundState,
        _ => BoundStateCount::TwoBoundStates,
    };
    let zero_mode = kappa_candidates(wall)
        .into_iter()
        .flatten()
        .any(|k| k.abs() <= ZERO_MODE_TOL);
    ExtensionClass { count, zero_mode }
}

/// Full problem specification: both unitaries plus the interval geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PistonConfig {
    pub outer: BoundaryUnitary,
    pub wall: BoundaryUnitary,
    /// Chamber length L.
    pub length: f64,
    /// Piston position a, 0 < a < L.
    pub position: f64,
}

impl PistonConfig {
    /// Build a configuration, rejecting walls with bound states.
    pub fn new(
        outer: BoundaryUnitary,
        wall: BoundaryUnitary,
        length: f64,
        position: f64,
    ) -> Result<Self> {
        let cfg = Self::new_diagnostic(outer, wall, length, position)?;
        let n = bound_state_momenta(&wall).len();
        if n > 0 {
            return Err(PistonError::Inadmissible { count: n });
        }
        Ok(cfg)
    }

    /// Build a configuration without the admissibility gate (for oracle and
    /// diagnostic work on inadmissible walls).
    pub fn new_diagnostic(
        outer: BoundaryUnitary,
        wall: BoundaryUnitary,
        length: f64,
        position: f64,
    ) -> Result<Self> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(PistonError::InvalidParameter(format!(
                "length must be positive and finite, got {length}"
            )));
        }
        if !(position > 0.0 && position < length) {
            return Err(PistonError::InvalidParameter(format!(
                "position must satisfy 0 < a < L, got a = {position}, L = {length}"
            )));
        }
        Ok(Self {
            outer,
            wall,
            length,
            position,
        })
    }

    /// Same configuration with the piston moved.
    pub fn with_position(&self, position: f64) -> Result<Self> {
        Self::new_diagnostic(self.outer, self.wall, self.length, position)
    }
}

/// Dirichlet unitary −I.
pub fn dirichlet() -> BoundaryUnitary {
    BoundaryUnitary::new(PI, 0.0, [0.0, 0.0, 1.0]).unwrap()
}

/// Neumann unitary +I.
pub fn neumann() -> BoundaryUnitary {
    BoundaryUnitary::new(0.0, 0.0, [0.0, 0.0, 1.0]).unwrap()
}
