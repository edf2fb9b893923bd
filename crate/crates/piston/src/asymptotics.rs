//! Closed-form large-z expansion of ln[z⁻² h(iz)]:
//!
//!   ln[z⁻² h(iz)] ≃ zL + χ ln z + τ(θ,γ) + τ(α,β) + Σ_n ω_n / zⁿ .
//!
//! Each boundary pair (x, y) contributes through Ψ(z; x, y) = m₋ − 2z sin x −
//! z² m₊ with m± = cos x ± cos y.  The expansion changes *form* — not just
//! coefficients — depending on whether m₊ and sin x vanish, so those tests are
//! decided on exactly snapped trigonometric values (see `util::snap_trig`): a
//! floating-point near-zero must never pick the wrong branch.
//!
//! The constant τ never enters any computed quantity (the continuation
//! differentiates in z first); it is kept for the cross-module consistency
//! tests only, as ln of an absolute value.

use crate::boundary::PistonConfig;
use crate::util::{gamma, snap_trig};

/// (m₊, m₋) = (cos x + cos y, cos x − cos y), on snapped values.
pub fn m_pm(x: f64, y: f64) -> (f64, f64) {
    let cx = snap_trig(x).cos;
    let cy = snap_trig(y).cos;
    (cx + cy, cx - cy)
}

/// Coefficient ω_n(x, y) of z^{−n} in ln Ψ(z; x, y) (up to the overall ln z
/// and constant terms).
pub fn omega_n(n: usize, x: f64, y: f64) -> f64 {
    assert!(n >= 1);
    let sx = snap_trig(x).sin;
    let (m_p, m_m) = m_pm(x, y);
    if m_p != 0.0 {
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        let mut sum = 0.0;
        for j in 0..=n / 2 {
            let coeff = 2f64.powi((n - 2 * j) as i32) * gamma((n - j) as f64)
                / (gamma(j as f64 + 1.0) * gamma((n - 2 * j) as f64 + 1.0));
            sum += coeff * sx.powi((n - 2 * j) as i32) * m_m.powi(j as i32)
                / m_p.powi((n - j) as i32);
        }
        sign * sum
    } else if sx != 0.0 {
        -(snap_trig(x).cos / sx).powi(n as i32) / n as f64
    } else {
        0.0
    }
}

/// Magnitude of the outermost root of Ψ(z; x, y) = m₋ − 2z sin x − z² m₊: the
/// 1/z expansion of ln Ψ converges only beyond it.
pub fn psi_root_radius(x: f64, y: f64) -> f64 {
    let sx = snap_trig(x).sin;
    let (m_p, m_m) = m_pm(x, y);
    if m_p != 0.0 {
        let disc = sx * sx + m_p * m_m;
        if disc >= 0.0 {
            let r1 = (-sx + disc.sqrt()) / m_p;
            let r2 = (-sx - disc.sqrt()) / m_p;
            r1.abs().max(r2.abs())
        } else {
            (m_m / m_p).abs().sqrt()
        }
    } else if sx != 0.0 {
        (m_m / (2.0 * sx)).abs()
    } else {
        0.0
    }
}

/// Convergence radius of the combined ω series for a configuration.
pub fn expansion_radius(cfg: &PistonConfig) -> f64 {
    psi_root_radius(cfg.wall.phase(), cfg.wall.mix())
        .max(psi_root_radius(cfg.outer.phase(), cfg.outer.mix()))
}

/// Constant term τ(x, y) of the expansion (stored as ln of an absolute value).
pub fn tau(x: f64, y: f64) -> f64 {
    let sx = snap_trig(x).sin;
    let (m_p, m_m) = m_pm(x, y);
    if m_p != 0.0 {
        m_p.abs().ln()
    } else if sx != 0.0 {
        (2.0 * sx).abs().ln()
    } else {
        m_m.abs().ln()
    }
}

/// Integer power of ln z:
/// χ = 2 − δ(m₊(θ,γ))[1 + δ(sin θ)] − δ(m₊(α,β))[1 + δ(sin α)].
pub fn chi_exponent(wall_pair: (f64, f64), outer_pair: (f64, f64)) -> i32 {
    let drop = |pair: (f64, f64)| -> i32 {
        let (m_p, _) = m_pm(pair.0, pair.1);
        if m_p != 0.0 {
            0
        } else if snap_trig(pair.0).sin != 0.0 {
            1
        } else {
            2
        }
    };
    2 - drop(wall_pair) - drop(outer_pair)
}

/// Assembled subtraction data for one configuration.
#[derive(Debug, Clone)]
pub struct AsymptoticData {
    pub chi: i32,
    /// omega[n-1] = ω_n(θ,γ) + ω_n(α,β) for n = 1..=order.
    pub omega: Vec<f64>,
    /// τ(θ,γ) + τ(α,β), informational only.
    pub tau_sum: f64,
    pub order: usize,
}

impl AsymptoticData {
    pub fn new(cfg: &PistonConfig, order: usize) -> Self {
        let wall = (cfg.wall.phase(), cfg.wall.mix());
        let outer = (cfg.outer.phase(), cfg.outer.mix());
        let omega = (1..=order)
            .map(|n| omega_n(n, wall.0, wall.1) + omega_n(n, outer.0, outer.1))
            .collect();
        AsymptoticData {
            chi: chi_exponent(wall, outer),
            omega,
            tau_sum: tau(wall.0, wall.1) + tau(outer.0, outer.1),
            order,
        }
    }
}

/// The z-dependent subtraction zL + χ ln z + Σ_{n≤N} ω_n z^{−n}.
pub fn subtraction_term(z: f64, data: &AsymptoticData, length: f64) -> f64 {
    let mut tail = 0.0;
    for (n, &w) in data.omega.iter().enumerate().rev() {
        tail += w / z.powi(n as i32 + 1);
    }
    z * length + data.chi as f64 * z.ln() + tail
}
