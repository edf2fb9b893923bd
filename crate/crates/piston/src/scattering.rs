//! Point-interaction scattering data of the piston wall on the line.
//!
//! The wall at x = a acts as a point interaction whose transmission and
//! reflection amplitudes are rational in the wavenumber k with common
//! denominator
//!
//!   D(k) = (k²+1) cos θ + (k²−1) cos γ + 2ik sin θ .
//!
//! The secular function consumes the ρ/τ numerators (ρ = D·r, τ = D·t)
//! directly, so amplitudes are assembled from those plus one shared division.
//! The a-dependence enters only through the shift factors e^{±2ika} of the
//! reflection amplitudes, kept separate from r itself.

use num_complex::Complex64;

use crate::boundary::BoundaryUnitary;
use crate::error::{PistonError, Result};

const DEGENERATE_TOL: f64 = 1e-300;

/// Amplitudes and numerators at one wavenumber.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringData {
    pub k: Complex64,
    pub d_value: Complex64,
    pub t_right: Complex64,
    pub r_right: Complex64,
    pub t_left: Complex64,
    pub r_left: Complex64,
    /// Numerators ρ = D·r and τ = D·t.
    pub rho_right: Complex64,
    pub rho_left: Complex64,
    pub tau_right: Complex64,
    pub tau_left: Complex64,
    /// Position-shifted reflections r̃_R = e^{2ika} r_R, r̃_L = e^{−2ika} r_L.
    pub r_right_shifted: Complex64,
    pub r_left_shifted: Complex64,
}

/// The denominator D(k) of the wall amplitudes.
pub fn d_function(k: Complex64, wall: &BoundaryUnitary) -> Complex64 {
    let t = wall.phase_trig();
    let g = wall.mix_trig();
    let k2 = k * k;
    (k2 + 1.0) * t.cos + (k2 - 1.0) * g.cos + Complex64::new(0.0, 2.0) * k * t.sin
}

/// Numerators (ρ_R, ρ_L, τ_R, τ_L) of the amplitudes.
pub fn numerators(
    k: Complex64,
    wall: &BoundaryUnitary,
) -> (Complex64, Complex64, Complex64, Complex64) {
    let t = wall.phase_trig();
    let g = wall.mix_trig();
    let [q1, q2, q3] = wall.axis();
    let k2 = k * k;
    let even = (k2 + 1.0) * g.cos + (k2 - 1.0) * t.cos;
    let odd = Complex64::new(0.0, 2.0) * k * q3 * g.sin;
    let rho_r = even + odd;
    let rho_l = even - odd;
    let tau_r = Complex64::new(0.0, -2.0) * k * Complex64::new(q1, -q2) * g.sin;
    let tau_l = Complex64::new(0.0, -2.0) * k * Complex64::new(q1, q2) * g.sin;
    (rho_r, rho_l, tau_r, tau_l)
}

/// Full scattering data with the piston at position `a`.
pub fn amplitudes(k: Complex64, wall: &BoundaryUnitary, a: f64) -> Result<ScatteringData> {
    let d = d_function(k, wall);
    if d.norm() < DEGENERATE_TOL {
        return Err(PistonError::DegenerateWall {
            k: format!("{k}"),
            magnitude: d.norm(),
        });
    }
    let (rho_r, rho_l, tau_r, tau_l) = numerators(k, wall);
    let r_right = rho_r / d;
    let r_left = rho_l / d;
    let t_right = tau_r / d;
    let t_left = tau_l / d;
    let shift = (Complex64::new(0.0, 2.0) * k * a).exp();
    Ok(ScatteringData {
        k,
        d_value: d,
        t_right,
        r_right,
        t_left,
        r_left,
        rho_right: rho_r,
        rho_left: rho_l,
        tau_right: tau_r,
        tau_left: tau_l,
        r_right_shifted: r_right * shift,
        r_left_shifted: r_left / shift,
    })
}

/// det S = −D(−k)/D(k); unimodular for real k.
pub fn s_matrix_det(k: Complex64, wall: &BoundaryUnitary) -> Result<Complex64> {
    let d = d_function(k, wall);
    if d.norm() < DEGENERATE_TOL {
        return Err(PistonError::DegenerateWall {
            k: format!("{k}"),
            magnitude: d.norm(),
        });
    }
    Ok(-d_function(-k, wall) / d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{dirichlet, neumann, BoundaryUnitary};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn d_function_special_walls() {
        assert_abs_diff_eq!((d_function(c(3.3), &dirichlet()) - c(-2.0)).norm(), 0.0);
        let k = c(1.7);
        assert_abs_diff_eq!(
            (d_function(k, &neumann()) - c(2.0 * 1.7 * 1.7)).norm(),
            0.0,
            epsilon = 1e-14
        );
        // theta=0, gamma=pi/2 at k=2i: (1-4)*1 = -3
        let w = BoundaryUnitary::new(0.0, FRAC_PI_2, [0.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(
            (d_function(Complex64::new(0.0, 2.0), &w) - c(-3.0)).norm(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn mirror_amplitudes() {
        // Neumann: r = 1, t = 0
        let s = amplitudes(c(1.7), &neumann(), 0.3).unwrap();
        assert_abs_diff_eq!((s.r_right - c(1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((s.r_left - c(1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.t_right.norm(), 0.0, epsilon = 1e-14);
        // Dirichlet: r = -1, t = 0
        let s = amplitudes(c(0.9), &dirichlet(), 0.3).unwrap();
        assert_abs_diff_eq!((s.r_right - c(-1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((s.r_left - c(-1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.t_left.norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn transparent_wall() {
        // theta = gamma = pi/2, q = x-hat: D = 2ik, tau = -2ik, so t = -1, r = 0
        let w = BoundaryUnitary::new(FRAC_PI_2, FRAC_PI_2, [1.0, 0.0, 0.0]).unwrap();
        let s = amplitudes(c(2.4), &w, 0.5).unwrap();
        assert_abs_diff_eq!(s.r_right.norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((s.t_right - c(-1.0)).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!((s.t_left - c(-1.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn det_s_examples() {
        assert_abs_diff_eq!(
            (s_matrix_det(c(1.1), &neumann()).unwrap() - c(-1.0)).norm(),
            0.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            (s_matrix_det(c(0.4), &dirichlet()).unwrap() - c(-1.0)).norm(),
            0.0,
            epsilon = 1e-14
        );
        let w = BoundaryUnitary::new(FRAC_PI_2, 0.0, [0.0, 0.0, 1.0]).unwrap();
        assert_abs_diff_eq!(
            (s_matrix_det(c(1.0), &w).unwrap() - c(1.0)).norm(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn unitarity_at_a_generic_wall() {
        let w = BoundaryUnitary::new(0.8, -0.6, [0.5, -0.2, 0.6]).unwrap();
        let s = amplitudes(c(2.1), &w, 0.3).unwrap();
        assert_abs_diff_eq!(
            s.r_right.norm_sqr() + s.t_right.norm_sqr(),
            1.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            s.r_left.norm_sqr() + s.t_left.norm_sqr(),
            1.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn d_vanishes_at_bound_state_momenta() {
        let w = BoundaryUnitary::new(-FRAC_PI_2, PI / 4.0, [0.0, 0.0, 1.0]).unwrap();
        for kappa in crate::boundary::bound_state_momenta(&w) {
            let d = d_function(Complex64::new(0.0, kappa), &w);
            assert!(d.norm() < 1e-10, "|D(i kappa)| = {}", d.norm());
        }
    }
}
