//! The analytic-continuation engine: strip representation of ζ_λ, the
//! subtracted function Z(s, a), the meromorphic A_i terms, the Casimir energy
//! report with its explicit 1/ε pole and ln μ² ambiguity, and the Casimir
//! force
//!
//!   F(a) = −(1/2π) Σ_λ d(λ) ∫₀^∞ ∂_a ln h(i√(w²+λ²), a) dw .
//!
//! The λ = 0 transverse mode needs care: the subtracted integrand of Z is not
//! integrable at the origin for s near −1/2, so that member is evaluated in a
//! split form — the full integrand on (0, 1), the subtracted one on (1, ∞),
//! and the subtraction's primitive continued in closed form.  The split makes
//! the λ = 0 member's simple pole at s = −1/2 explicit (coefficient ω̄₁/2π);
//! `big_z` returns the finite part and the energy report books the pole.
//! λ = 0 modes are included in the force sum and in Z but excluded from the
//! transverse zeta data ζ_N, which is the standard Σ_{λ>0} convention.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::asymptotics::{expansion_radius, AsymptoticData};
use crate::boundary::PistonConfig;
use crate::error::{PistonError, Result};
use crate::quad::{integrate, integrate_complex};
use crate::secular::SecularCoeffs;
use crate::spectra::TransverseSpectrum;
use crate::util::{digamma, gamma, CompensatedSum, EULER_GAMMA};

/// λ below this is treated as a zero transverse mode.
const LAMBDA_ZERO_TOL: f64 = 1e-12;

/// Meromorphic data of the transverse zeta function ζ_N(s) = Σ_{λ>0} d(λ) λ^{−2s},
/// supplied by the caller (closed forms are manifold-specific and out of scope).
#[derive(Debug, Clone, Default)]
pub struct ZetaNData {
    pub zeta_minus1: f64,
    pub zeta_prime_minus1: f64,
    pub zeta_0: f64,
    pub zeta_prime_0: f64,
    /// index i ∈ {0..D} ↦ (residue, finite part) of ζ_N at s = (i−1)/2.
    pub half_points: BTreeMap<usize, (f64, f64)>,
}

impl ZetaNData {
    /// Data of the trivial (point) cross section: ζ_N ≡ 0.
    pub fn trivial(dim_total: usize) -> Self {
        let mut half_points = BTreeMap::new();
        for i in 0..=dim_total {
            half_points.insert(i, (0.0, 0.0));
        }
        ZetaNData {
            half_points,
            ..Default::default()
        }
    }
}

/// Casimir force with error diagnostics.
#[derive(Debug, Clone)]
pub struct ForceResult {
    pub force: f64,
    pub quadrature_error: f64,
    pub modes_used: usize,
    /// Bound on the contribution of λ-sum terms not evaluated (both skipped
    /// known modes and modes beyond the spectrum cutoff).
    pub tail_bound: f64,
    /// (λ, contribution) per evaluated mode.
    pub per_mode: Vec<(f64, f64)>,
}

/// Casimir energy decomposition; pole and finite part are never summed.
#[derive(Debug, Clone)]
pub struct EnergyReport {
    /// Coefficient of 1/ε, which is also the coefficient of ln μ².
    pub pole_coefficient: f64,
    pub finite_part: f64,
    /// Finite part of the subtracted function Z(−1/2, a).
    pub z_at_minus_half: f64,
    /// Which ζ_N inputs (and the λ=0 mode) drive the μ-ambiguity.
    pub ambiguity_note: Vec<String>,
}

/// Equilibrium character of a zero-force position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equilibrium {
    Stable,
    Unstable,
}

fn decay_rate(cfg: &PistonConfig) -> f64 {
    cfg.position.min(cfg.length - cfg.position)
}

/// Verify the secular sign is constant on the imaginary axis (admissibility).
fn check_sign(coeffs: &SecularCoeffs, z_max: f64) -> Result<()> {
    coeffs.sign_scan(z_max)?;
    Ok(())
}

/// ζ_λ(s) for Re s in (1/2, 1) by direct contour quadrature of
/// (sin πs/π) ∫_λ^∞ (z²−λ²)^{−s} ∂_z ln[h(iz)/z²] dz.
pub fn zeta_lambda_strip(s: Complex64, lambda: f64, cfg: &PistonConfig) -> Result<Complex64> {
    if !(s.re > 0.5 && s.re < 1.0) {
        return Err(PistonError::OutOfStrip { re_s: s.re });
    }
    assert!(lambda > 0.0, "strip representation requires lambda > 0");
    let coeffs = SecularCoeffs::new(cfg);
    let data = AsymptoticData::new(cfg, 4);
    let z_cap = (40.0 * lambda).max(400.0 / cfg.length).max(400.0);
    check_sign(&coeffs, z_cap)?;

    // z = lambda cosh(u) absorbs the (z-lambda)^{-s} endpoint factor
    let u_cap = (z_cap / lambda + ((z_cap / lambda).powi(2) - 1.0).sqrt()).ln();
    let lam_pow = ((1.0 - 2.0 * s) * lambda.ln()).exp();
    let integrand = |u: f64| -> Complex64 {
        let sh = u.sinh();
        let z = lambda * u.cosh();
        let weight = lam_pow * ((1.0 - 2.0 * s) * sh.max(1e-300).ln()).exp();
        weight * coeffs.dz_log_h_over_z2(z)
    };
    let (body, _err) = integrate_complex(&integrand, 0.0, u_cap, 1e-11);

    // analytic tail beyond z_cap from the large-z law L + chi/z - sum n w_n z^{-n-1},
    // with (z^2-lambda^2)^{-s} expanded in lambda^2/z^2
    let mut tail = Complex64::new(0.0, 0.0);
    let chi = data.chi as f64;
    let mut binom = Complex64::new(1.0, 0.0); // (s)_m / m!
    for m in 0..5 {
        let mf = m as f64;
        if m > 0 {
            binom = binom * (s + (mf - 1.0)) / mf;
        }
        let lam2m = lambda.powi(2 * m as i32);
        let zp = |p: Complex64| -> Complex64 { (p * z_cap.ln()).exp() };
        // ∫ L z^{-2s-2m} dz and ∫ chi z^{-2s-2m-1} dz from z_cap to ∞
        let e1 = 2.0 * s + 2.0 * mf - 1.0;
        tail += binom * lam2m * cfg.length * zp(-e1) / e1;
        let e2 = 2.0 * s + 2.0 * mf;
        tail += binom * lam2m * chi * zp(-e2) / e2;
        for (n_idx, &w) in data.omega.iter().enumerate() {
            let n = n_idx as f64 + 1.0;
            let e3 = 2.0 * s + 2.0 * mf + n;
            tail -= binom * lam2m * n * w * zp(-e3) / e3;
        }
    }

    let sin_factor = (PI * s).sin() / PI;
    Ok(sin_factor * (body + tail))
}

/// Closed-form continuation of ∫₁^∞ z^{−2s}(L + χ/z − Σ_{n≤n_sub} n ω_n z^{−n−1}) dz,
/// with terms whose denominator vanishes (the A_i pole locations) dropped,
/// leaving the finite part.
fn lambda0_tails(s: f64, length: f64, data: &AsymptoticData, n_sub: usize) -> f64 {
    let mut t = 0.0;
    if (2.0 * s - 1.0).abs() > 1e-9 {
        t += length / (2.0 * s - 1.0);
    }
    if (2.0 * s).abs() > 1e-9 {
        t += data.chi as f64 / (2.0 * s);
    }
    for (n_idx, &w) in data.omega[..n_sub].iter().enumerate() {
        let n = n_idx as f64 + 1.0;
        if (2.0 * s + n).abs() > 1e-9 {
            t -= n * w / (2.0 * s + n);
        }
    }
    t
}

/// Quadrature cap: beyond it the subtracted integrand is below the rounding
/// noise of the subtraction, so its inverse-power law is integrated in closed
/// form instead.  Everything exponentially small in h must also be negligible
/// there, and the ω series must converge comfortably.
fn far_cap(lambda: f64, radius: f64, rate: f64) -> f64 {
    (3.0 * lambda + 10.0).max(8.0 * radius).max(17.0 / rate)
}

/// ∫_{z_hi}^∞ (z²−λ²)^{−s} z^{−n−1} dz for z_hi ≥ 3λ, via the binomial
/// expansion of (1−λ²/z²)^{−s}.
fn far_tail_integral(s: f64, lambda: f64, z_hi: f64, n: usize) -> f64 {
    let nf = n as f64;
    if lambda <= LAMBDA_ZERO_TOL {
        return z_hi.powf(-(2.0 * s + nf)) / (2.0 * s + nf);
    }
    let u1 = (lambda / z_hi).powi(2);
    debug_assert!(u1 < 0.2);
    let mut coeff = 1.0; // (s)_m / m!
    let mut u_pow = u1.powf(s + nf / 2.0);
    let mut sum = 0.0;
    for m in 0..=20 {
        let mf = m as f64;
        if m > 0 {
            coeff *= (s + mf - 1.0) / mf;
            u_pow *= u1;
        }
        sum += coeff * u_pow / (s + nf / 2.0 + mf);
    }
    0.5 * lambda.powf(-(2.0 * s + nf)) * sum
}

/// Tail Σ_{n>n_sub} (−n ω_n) ∫_{z_hi}^∞ (z²−λ²)^{−s} z^{−n−1} dz of a member,
/// from the inverse-power law of the subtracted integrand.
fn far_tail(s: f64, lambda: f64, z_hi: f64, data: &AsymptoticData, n_sub: usize) -> f64 {
    let mut t = 0.0;
    for (n_idx, &w) in data.omega.iter().enumerate().skip(n_sub) {
        let n = n_idx + 1;
        t -= n as f64 * w * far_tail_integral(s, lambda, z_hi, n);
    }
    t
}

fn g_subtracted(z: f64, coeffs: &SecularCoeffs, data: &AsymptoticData, n_sub: usize) -> f64 {
    let mut sub = coeffs.length() + data.chi as f64 / z;
    for (n_idx, &w) in data.omega[..n_sub].iter().enumerate() {
        let n = n_idx as f64 + 1.0;
        sub -= n * w / z.powi(n_idx as i32 + 2);
    }
    coeffs.dz_log_h_over_z2(z) - sub
}

/// Finite part of the λ = 0 member of Z(s, a) (per unit degeneracy).
fn lambda0_member(
    s: f64,
    coeffs: &SecularCoeffs,
    data: &AsymptoticData,
    n_sub: usize,
    z_hi: f64,
    tol: f64,
) -> f64 {
    let length = coeffs.length();
    // full integrand on (0, 1): z^{-2s} * g_full, with g_full = O(z) at 0
    let part1 = integrate(
        &|z: f64| z.powf(-2.0 * s) * coeffs.dz_log_h_over_z2(z),
        0.0,
        1.0,
        tol,
    );
    // subtracted integrand on (1, z_hi), mapped by t = 1/z
    let part2 = integrate(
        &|t: f64| {
            let z = 1.0 / t;
            z.powf(-2.0 * s) * g_subtracted(z, coeffs, data, n_sub) / (t * t)
        },
        1.0 / z_hi,
        1.0,
        tol,
    );
    let sin_factor = (PI * s).sin() / PI;
    sin_factor
        * (part1.value
            + part2.value
            + far_tail(s, 0.0, z_hi, data, n_sub)
            + lambda0_tails(s, length, data, n_sub))
}

/// One λ > 0 member of Z(s, a): ∫_λ^∞ (z²−λ²)^{−s} g_sub(z) dz (per unit
/// degeneracy, without the sin πs/π prefactor).
fn lambda_member(
    s: f64,
    lambda: f64,
    coeffs: &SecularCoeffs,
    data: &AsymptoticData,
    n_sub: usize,
    z_hi: f64,
    tol: f64,
) -> f64 {
    // near region via z = lambda cosh u (endpoint weight handled exactly)
    let z_mid = 2.0 * lambda.max(1.0) + lambda;
    let u_mid = {
        let r = z_mid / lambda;
        (r + (r * r - 1.0).sqrt()).ln()
    };
    let near = integrate(
        &|u: f64| {
            let sh = u.sinh();
            if sh <= 0.0 {
                return 0.0;
            }
            let z = lambda * u.cosh();
            lambda.powf(1.0 - 2.0 * s)
                * sh.powf(1.0 - 2.0 * s)
                * g_subtracted(z, coeffs, data, n_sub)
        },
        0.0,
        u_mid,
        tol * 0.5,
    );
    // mid region via t = 1/z, stopped at the cancellation-noise cap
    let mid = integrate(
        &|t: f64| {
            let z = 1.0 / t;
            (z * z - lambda * lambda).powf(-s) * g_subtracted(z, coeffs, data, n_sub) / (t * t)
        },
        1.0 / z_hi,
        1.0 / z_mid,
        tol * 0.5,
    );
    near.value + mid.value + far_tail(s, lambda, z_hi, data, n_sub)
}

/// The subtracted, analytically continued function Z(s, a) of order `order`,
/// summed over the supplied spectrum (λ = 0 members return their finite part).
pub fn big_z(s: f64, cfg: &PistonConfig, spectrum: &TransverseSpectrum, order: usize) -> Result<f64> {
    big_z_with_tol(s, cfg, spectrum, order, 1e-11)
}

/// As [`big_z`] with an explicit per-integral quadrature tolerance.
pub fn big_z_with_tol(
    s: f64,
    cfg: &PistonConfig,
    spectrum: &TransverseSpectrum,
    order: usize,
    tol: f64,
) -> Result<f64> {
    assert!(s > -1.0 && s < 1.0, "Z evaluated outside (-1, 1)");
    assert!(order >= spectrum.dimension + 1, "order below D = d + 1");
    let coeffs = SecularCoeffs::new(cfg);
    // extra ω orders drive the analytic far tails of the members
    let data = AsymptoticData::new(cfg, order + 16);
    let radius = expansion_radius(cfg);
    let rate = decay_rate(cfg);
    let z_max = spectrum.lambda_max.max(50.0 / cfg.length) + 10.0;
    check_sign(&coeffs, z_max)?;
    let sin_factor = (PI * s).sin() / PI;
    let mut acc = CompensatedSum::new();
    for mode in &spectrum.modes {
        let d = mode.degeneracy as f64;
        let z_hi = far_cap(mode.lambda, radius, rate);
        if mode.lambda <= LAMBDA_ZERO_TOL {
            acc.add(d * lambda0_member(s, &coeffs, &data, order, z_hi, tol));
        } else {
            acc.add(
                d * sin_factor * lambda_member(s, mode.lambda, &coeffs, &data, order, z_hi, tol),
            );
        }
    }
    Ok(acc.value())
}

/// Pole and finite part of Σ_{i=−1}^{D} A_i at s = −1/2 + ε, assembled from the
/// supplied transverse zeta data.
pub fn a_i_terms(
    data: &AsymptoticData,
    zn: &ZetaNData,
    length: f64,
    dim_total: usize,
) -> Result<(f64, f64)> {
    assert!(data.order >= dim_total, "asymptotic order below D");
    let ln2 = 2f64.ln();
    let mut pole = 0.0;
    let mut finite = 0.0;

    // A_{-1}: L/(4π) [ζ_N(−1)/ε + ζ'_N(−1) + (2 ln 2 − 1) ζ_N(−1)]
    pole += length * zn.zeta_minus1 / (4.0 * PI);
    finite += length / (4.0 * PI) * (zn.zeta_prime_minus1 + (2.0 * ln2 - 1.0) * zn.zeta_minus1);

    // A_0: (χ/2) [Res ζ_N(−1/2)/ε + FP ζ_N(−1/2)]
    let (res_mhalf, fp_mhalf) = *zn
        .half_points
        .get(&0)
        .ok_or(PistonError::MissingZetaData { index: 0 })?;
    let half_chi = data.chi as f64 / 2.0;
    pole += half_chi * res_mhalf;
    finite += half_chi * fp_mhalf;

    // A_1: (ω̄₁/2π) [ζ_N(0)/ε + ζ'_N(0) + 2(ln 2 − 1) ζ_N(0)]
    if dim_total >= 1 {
        let w1 = data.omega[0];
        pole += w1 * zn.zeta_0 / (2.0 * PI);
        finite += w1 / (2.0 * PI) * (zn.zeta_prime_0 + 2.0 * (ln2 - 1.0) * zn.zeta_0);
    }

    // A_i, i ≥ 2: coefficient ω̄_i Γ((i−1)/2) / (2√π Γ(i/2))
    for i in 2..=dim_total {
        let (res, fp) = *zn
            .half_points
            .get(&i)
            .ok_or(PistonError::MissingZetaData { index: i })?;
        let wi = data.omega[i - 1];
        let half = (i as f64 - 1.0) / 2.0;
        let coeff = wi * gamma(half) / (2.0 * PI.sqrt() * gamma(i as f64 / 2.0));
        pole += coeff * res;
        finite += coeff * (fp + (2.0 - EULER_GAMMA - 2.0 * ln2 + digamma(half)) * res);
    }
    Ok((pole, finite))
}

/// Casimir energy decomposition at s = −1/2, with N = D = d + 1.
pub fn casimir_energy_report(
    cfg: &PistonConfig,
    spectrum: &TransverseSpectrum,
    zn: &ZetaNData,
) -> Result<EnergyReport> {
    let dim_total = spectrum.dimension + 1;
    let data = AsymptoticData::new(cfg, dim_total);
    let z_value = big_z(-0.5, cfg, spectrum, dim_total)?;
    let (mut pole, finite_ai) = a_i_terms(&data, zn, cfg.length, dim_total)?;

    let mut ambiguity = Vec::new();
    if zn.zeta_minus1 != 0.0 {
        ambiguity.push("zeta_N(-1) != 0".to_string());
    }
    if zn.zeta_0 != 0.0 && data.omega[0] != 0.0 {
        ambiguity.push("omega_1 * zeta_N(0) != 0".to_string());
    }
    for (&i, &(res, _)) in &zn.half_points {
        if res != 0.0 {
            ambiguity.push(format!("Res zeta_N at ({} - 1)/2 != 0", i));
        }
    }

    // λ = 0 modes carry their own pole ω̄₁/(2π) per unit degeneracy
    let d0: f64 = spectrum
        .modes
        .iter()
        .filter(|m| m.lambda <= LAMBDA_ZERO_TOL)
        .map(|m| m.degeneracy as f64)
        .sum();
    if d0 > 0.0 && data.omega[0] != 0.0 {
        pole += d0 * data.omega[0] / (2.0 * PI);
        ambiguity.push("lambda = 0 mode with omega_1 != 0".to_string());
    }

    Ok(EnergyReport {
        pole_coefficient: 0.5 * pole,
        finite_part: 0.5 * (z_value + finite_ai),
        z_at_minus_half: z_value,
        ambiguity_note: ambiguity,
    })
}

/// Casimir force on the piston via the w-integral of ∂_a ln h.
pub fn casimir_force(
    cfg: &PistonConfig,
    spectrum: &TransverseSpectrum,
    tol: f64,
) -> Result<ForceResult> {
    let coeffs = SecularCoeffs::new(cfg);

    // structurally null couplings mean an exactly zero force, regardless of
    // longitudinal zero modes
    if coeffs.a_coupling_vanishes() {
        return Ok(ForceResult {
            force: 0.0,
            quadrature_error: 0.0,
            modes_used: spectrum.modes.len(),
            tail_bound: 0.0,
            per_mode: spectrum.modes.iter().map(|m| (m.lambda, 0.0)).collect(),
        });
    }
    coeffs.require_no_zero_mode()?;
    let z_max = spectrum.lambda_max.max(50.0 / cfg.length) + 10.0;
    check_sign(&coeffs, z_max)?;

    let rate = decay_rate(cfg);
    let n_modes = spectrum.modes.len().max(1);
    let tol_budget_quad = 0.5 * tol;
    let tol_budget_tail = 0.25 * tol;

    let mut acc = CompensatedSum::new();
    let mut quad_err = 0.0;
    let mut per_mode = Vec::new();
    let mut tail_bound = 0.0;
    let mut envelope: Option<f64> = None; // C with |I_λ| ≤ C e^{−2 m λ}
    let mut last_lambda = 0.0;
    let mut last_spacing = 0.0;
    let mut modes_used = 0;
    let mut idx = 0;

    while idx < spectrum.modes.len() {
        let mode = spectrum.modes[idx];
        let d = mode.degeneracy as f64;
        // early stop once the envelope certifies the rest below budget
        if let Some(c_env) = envelope {
            let mut remaining = 0.0;
            for rest in &spectrum.modes[idx..] {
                remaining +=
                    rest.degeneracy as f64 / (2.0 * PI) * c_env * (-2.0 * rate * rest.lambda).exp();
            }
            if remaining < tol_budget_tail {
                tail_bound += remaining;
                break;
            }
        }
        let tol_mode = tol_budget_quad * 2.0 * PI / (d * n_modes as f64);
        let integral = integrate(
            &|u: f64| {
                if u <= 0.0 {
                    return 0.0;
                }
                let w = -u.ln() / rate;
                let z = (w * w + mode.lambda * mode.lambda).sqrt();
                coeffs.d_lna_log_h(z) / (rate * u)
            },
            0.0,
            1.0,
            tol_mode,
        );
        let contribution = -d / (2.0 * PI) * integral.value;
        acc.add(contribution);
        quad_err += d / (2.0 * PI) * integral.error;
        per_mode.push((mode.lambda, contribution));
        modes_used += 1;
        if mode.lambda > LAMBDA_ZERO_TOL {
            // measure the decay constant at this mode, inflated x10
            envelope = Some(10.0 * integral.value.abs() * (2.0 * rate * mode.lambda).exp());
            last_spacing = mode.lambda - last_lambda;
            last_lambda = mode.lambda;
        }
        idx += 1;
    }

    // beyond-cutoff estimate for truncated spectra (the point manifold and any
    // spectrum ending exactly at its last eigenvalue have none by construction)
    if spectrum.lambda_max > 0.0 && last_spacing > 0.0 {
        if let Some(c_env) = envelope {
            let d_last = spectrum.modes.last().map(|m| m.degeneracy as f64).unwrap_or(1.0);
            let growth = (1.0 + last_spacing / spectrum.lambda_max)
                .powi(spectrum.dimension as i32 + 1);
            let ratio = growth * (-2.0 * rate * last_spacing).exp();
            if ratio < 1.0 {
                let first = d_last * growth / (2.0 * PI)
                    * c_env
                    * (-2.0 * rate * (spectrum.lambda_max + last_spacing)).exp();
                tail_bound += first / (1.0 - ratio);
            } else {
                // cutoff too low for the bound to close
                tail_bound += f64::INFINITY;
            }
        }
    }

    let achieved = quad_err + tail_bound;
    if achieved > tol {
        return Err(PistonError::ToleranceNotMet {
            achieved,
            requested: tol,
        });
    }
    Ok(ForceResult {
        force: acc.value(),
        quadrature_error: quad_err,
        modes_used,
        tail_bound,
        per_mode,
    })
}

/// Locate and classify zero-force positions from a sampled profile, refining
/// each bracket by bisection on the supplied force evaluator.
pub fn classify_equilibria<F>(
    force: F,
    profile: &[(f64, f64)],
    position_tol: f64,
) -> Result<Vec<(f64, Equilibrium)>>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut out = Vec::new();
    for pair in profile.windows(2) {
        let (a0, f0) = pair[0];
        let (a1, f1) = pair[1];
        if f0 == 0.0 || f0 * f1 > 0.0 {
            continue;
        }
        let (mut lo, mut hi, mut f_lo) = (a0, a1, f0);
        while hi - lo > position_tol {
            let mid = 0.5 * (lo + hi);
            let fm = force(mid)?;
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if f_lo * fm < 0.0 {
                hi = mid;
            } else {
                lo = mid;
                f_lo = fm;
            }
        }
        let root = 0.5 * (lo + hi);
        // force falling through zero restores the piston: stable
        let kind = if f0 > 0.0 {
            Equilibrium::Stable
        } else {
            Equilibrium::Unstable
        };
        out.push((root, kind));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{dirichlet, BoundaryUnitary, PistonConfig};
    use crate::spectra::point_spectrum;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    fn dirichlet_cfg(a: f64) -> PistonConfig {
        PistonConfig::new(dirichlet(), dirichlet(), 1.0, a).unwrap()
    }

    #[test]
    fn one_dimensional_dirichlet_force() {
        let cfg = dirichlet_cfg(0.25);
        let r = casimir_force(&cfg, &point_spectrum(), 1e-8).unwrap();
        let exact = -(PI / 24.0) * (1.0 / 0.0625 - 1.0 / 0.5625);
        assert!(
            (r.force - exact).abs() / exact.abs() < 1e-6,
            "force {} vs {}",
            r.force,
            exact
        );
        assert_eq!(r.modes_used, 1);
        assert!(r.quadrature_error + r.tail_bound <= 1e-8);
    }

    #[test]
    fn one_dimensional_dirichlet_energy() {
        let cfg = dirichlet_cfg(0.5);
        let report =
            casimir_energy_report(&cfg, &point_spectrum(), &ZetaNData::trivial(1)).unwrap();
        assert_abs_diff_eq!(report.finite_part, -PI / 6.0, epsilon = 1e-7);
        assert_eq!(report.pole_coefficient, 0.0);
        assert!(report.ambiguity_note.is_empty());
    }

    #[test]
    fn strip_representation_against_mode_sum() {
        // Dirichlet point manifold: eigen-wavenumbers m*pi/a and m*pi/(L-a)
        let a = 0.5;
        let cfg = dirichlet_cfg(a);
        let s = 0.75;
        // lambda shifts the eigenvalues: zeta_1(s) = sum (k_m^2 + lambda^2)^{-s}
        let lambda = 1.3;
        let direct: f64 = {
            let mut sum = 0.0;
            let mut tail_start = 0.0;
            for m in 1..200_000 {
                let k = m as f64 * PI / a; // both chambers coincide at a = 1/2
                sum += 2.0 * (k * k + lambda * lambda).powf(-s);
                tail_start = k;
            }
            // integral tail correction: ∫ 2 (k²+λ²)^{-s} dk/(π/a) beyond cutoff
            let spacing = PI / a;
            let tail = crate::quad::integrate(
                &|k: f64| 2.0 * (k * k + lambda * lambda).powf(-s) / spacing,
                tail_start + 0.5 * spacing,
                1e7,
                1e-12,
            );
            // analytic remainder beyond the quadrature cap:
            // ∫_K^∞ 2 k^{-2s} dk / spacing = 2 K^{1-2s} / ((2s-1) spacing)
            let cap: f64 = 1e7;
            let remainder = 2.0 * cap.powf(1.0 - 2.0 * s) / ((2.0 * s - 1.0) * spacing);
            sum + tail.value + remainder
        };
        let z = zeta_lambda_strip(Complex64::new(s, 0.0), lambda, &cfg).unwrap();
        assert!(z.im.abs() < 1e-9);
        assert!(
            (z.re - direct).abs() / direct.abs() < 1e-5,
            "strip {} vs sum {}",
            z.re,
            direct
        );
    }

    #[test]
    fn strip_guard() {
        let cfg = dirichlet_cfg(0.5);
        assert!(matches!(
            zeta_lambda_strip(Complex64::new(0.3, 0.0), 1.0, &cfg),
            Err(PistonError::OutOfStrip { .. })
        ));
    }

    #[test]
    fn null_force_configurations() {
        let outer = BoundaryUnitary::new(FRAC_PI_2, -FRAC_PI_2, [1.0, 0.0, 0.0]).unwrap();
        let wall = BoundaryUnitary::new(0.8, -0.6, [0.5, -0.2, 0.6]).unwrap();
        for a in [0.2, 0.35, 0.5, 0.65, 0.8] {
            let cfg = PistonConfig::new(outer, wall, 1.0, a).unwrap();
            let r = casimir_force(&cfg, &point_spectrum(), 1e-10).unwrap();
            assert_eq!(r.force, 0.0);
        }
    }

    #[test]
    fn equilibrium_classification() {
        let profile: Vec<(f64, f64)> = (0..=10)
            .map(|i| {
                let a = 0.1 + 0.08 * i as f64;
                (a, 0.5 - a) // falls through zero at a = 0.5
            })
            .collect();
        let roots = classify_equilibria(|a| Ok(0.5 - a), &profile, 1e-10).unwrap();
        assert_eq!(roots.len(), 1);
        assert_abs_diff_eq!(roots[0].0, 0.5, epsilon = 1e-9);
        assert_eq!(roots[0].1, Equilibrium::Stable);
    }

    #[test]
    fn unit_probe_bookkeeping() {
        // tagged unit probes isolate each bracket coefficient of the pole
        let cfg = PistonConfig::new(
            BoundaryUnitary::new(1.3, 0.5, [0.2, 0.7, 0.3]).unwrap(),
            BoundaryUnitary::new(0.8, -0.6, [0.5, -0.2, 0.6]).unwrap(),
            1.0,
            0.3,
        )
        .unwrap();
        let data = AsymptoticData::new(&cfg, 3);
        let mut zn = ZetaNData::trivial(3);
        zn.zeta_minus1 = 1.0;
        let (pole, _) = a_i_terms(&data, &zn, 1.0, 3).unwrap();
        assert_abs_diff_eq!(pole, 1.0 / (4.0 * PI), epsilon = 1e-15);

        let mut zn = ZetaNData::trivial(3);
        zn.half_points.insert(0, (1.0, 0.0));
        let (pole, _) = a_i_terms(&data, &zn, 1.0, 3).unwrap();
        assert_abs_diff_eq!(pole, data.chi as f64 / 2.0, epsilon = 1e-15);

        let mut zn = ZetaNData::trivial(3);
        zn.zeta_0 = 1.0;
        let (pole, _) = a_i_terms(&data, &zn, 1.0, 3).unwrap();
        assert_abs_diff_eq!(pole, data.omega[0] / (2.0 * PI), epsilon = 1e-15);

        let mut zn = ZetaNData::trivial(3);
        zn.half_points.insert(2, (1.0, 0.0));
        let (pole, _) = a_i_terms(&data, &zn, 1.0, 3).unwrap();
        // i = 2: Gamma(1/2)/(2 sqrt(pi) Gamma(1)) = 1/2
        assert_abs_diff_eq!(pole, data.omega[1] * 0.5, epsilon = 1e-15);
    }

    #[test]
    fn missing_zeta_entry_is_reported() {
        let cfg = dirichlet_cfg(0.3);
        let data = AsymptoticData::new(&cfg, 3);
        let mut zn = ZetaNData::trivial(3);
        zn.half_points.remove(&2);
        assert!(matches!(
            a_i_terms(&data, &zn, 1.0, 3),
            Err(PistonError::MissingZetaData { index: 2 })
        ));
    }
}
