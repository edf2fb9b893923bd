//! Randomized invariants of the scattering and secular layers.

use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, PI};

use casimir_piston::asymptotics::{expansion_radius, subtraction_term, AsymptoticData};
use casimir_piston::boundary::{bound_state_momenta, BoundaryUnitary, PistonConfig};
use casimir_piston::scattering::{amplitudes, s_matrix_det};
use casimir_piston::secular::{h_function, log_h_imag, small_k_coefficient};

fn unitary_strategy() -> impl Strategy<Value = BoundaryUnitary> {
    (
        -PI..PI,
        -FRAC_PI_2 + 1e-3..FRAC_PI_2 - 1e-3,
        [-1.0..1.0, -1.0..1.0, -1.0..1.0],
    )
        .prop_filter_map("degenerate axis or wall", |(phase, mix, axis)| {
            if axis.iter().map(|x| x * x).sum::<f64>() < 1e-2 {
                return None;
            }
            BoundaryUnitary::new(phase, mix, axis).ok()
        })
}

fn config_strategy() -> impl Strategy<Value = PistonConfig> {
    (unitary_strategy(), unitary_strategy(), 0.15..0.85)
        .prop_filter_map("inadmissible", |(outer, wall, a)| {
            PistonConfig::new(outer, wall, 1.0, a).ok()
        })
}

proptest! {
    /// Flux conservation of the wall: |r|² + |t|² = 1 on the real axis.
    #[test]
    fn wall_is_unitary(wall in unitary_strategy(), k in 1e-3..50.0f64) {
        let s = amplitudes(Complex64::new(k, 0.0), &wall, 0.5).unwrap();
        let right = s.r_right.norm_sqr() + s.t_right.norm_sqr();
        let left = s.r_left.norm_sqr() + s.t_left.norm_sqr();
        prop_assert!((right - 1.0).abs() < 1e-12, "right flux {right}");
        prop_assert!((left - 1.0).abs() < 1e-12, "left flux {left}");
    }

    /// The S-matrix determinant is a pure phase for real momenta.
    #[test]
    fn s_matrix_det_is_a_phase(wall in unitary_strategy(), k in 1e-3..50.0f64) {
        let det = s_matrix_det(Complex64::new(k, 0.0), &wall).unwrap();
        prop_assert!((det.norm() - 1.0).abs() < 1e-12, "|det S| = {}", det.norm());
    }

    /// h(iz) = h(−iz): the secular function is even on the imaginary axis,
    /// which is what makes the rotated integral representation real.
    #[test]
    fn secular_function_even_on_imaginary_axis(
        cfg in config_strategy(),
        z in 0.05..20.0f64,
    ) {
        let up = h_function(Complex64::new(0.0, z), &cfg);
        let down = h_function(Complex64::new(0.0, -z), &cfg);
        let scale = up.norm().max(1.0);
        prop_assert!((up - down).norm() < 1e-10 * scale, "h(iz) = {up}, h(-iz) = {down}");
    }

    /// Flipping the sign of the mix angle swaps the two bound-state branches
    /// κ± = −tan((θ±γ)/2) but leaves the set of bound states unchanged.
    #[test]
    fn bound_state_set_even_in_mix(wall in unitary_strategy()) {
        let flipped =
            BoundaryUnitary::new(wall.phase(), -wall.mix(), wall.axis()).unwrap();
        let mut a = bound_state_momenta(&wall);
        let mut b = bound_state_momenta(&flipped);
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-12 * x.max(1.0), "kappa {x} vs {y}");
        }
    }

    /// The closed-form k→0 coefficient agrees with a Richardson-extrapolated
    /// numeric limit of h(k)/k².
    #[test]
    fn small_k_coefficient_matches_numeric_limit(cfg in config_strategy()) {
        let closed = small_k_coefficient(&cfg);
        prop_assume!(closed.abs() > 1e-3);
        let f = |k: f64| h_function(Complex64::new(k, 0.0), &cfg).re / (k * k);
        let k = 2e-3;
        let numeric = (4.0 * f(k / 2.0) - f(k)) / 3.0;
        prop_assert!(
            (numeric - closed).abs() / closed.abs() < 1e-6,
            "closed {closed} vs numeric {numeric}"
        );
    }

    /// Beyond the convergence radius, the large-z expansion reproduces
    /// ln[z⁻²h(iz)] with the expected power-law remainder.
    #[test]
    fn asymptotic_subtraction_cancels_log_h(cfg in config_strategy()) {
        let order = 8;
        let data = AsymptoticData::new(&cfg, order);
        let z = 40.0f64.max(8.0 * expansion_radius(&cfg));
        // log_magnitude = ln|h(iz)| − zL; the expansion predicts
        // ln[z⁻²h(iz)] − zL = χ ln z + τ + Σ ω_n z^{−n} + remainder.
        let exact = log_h_imag(z, &cfg).log_magnitude - 2.0 * z.ln();
        let predicted = subtraction_term(z, &data, cfg.length) + data.tau_sum - z * cfg.length;
        // remainder is ω_{N+1}/z^{N+1} plus the e^{−2z·min(a,L−a)} pieces
        let bound = 1e4 / z.powi(order as i32 + 1)
            + (-2.0 * z * cfg.position.min(cfg.length - cfg.position)).exp() * 1e3;
        prop_assert!(
            (exact - predicted).abs() < bound.max(1e-9),
            "log h {exact} vs expansion {predicted} at z = {z}"
        );
    }
}
