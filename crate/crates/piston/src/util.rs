//! Small numeric utilities: exactly-snapped trigonometry, compensated
//! summation, and a few special-function helpers.
//!
//! The snapped trigonometry is load-bearing: the large-z asymptotics of the
//! secular function switch between structurally different expansions depending
//! on whether quantities like cos(α)+cos(β) vanish *exactly*.  Floating-point
//! `cos(PI/2)` is 6.1e-17, which silently selects the wrong branch and makes
//! the subtraction diverge.  All trig evaluation of boundary angles therefore
//! goes through [`snap_angle`]/[`SnappedTrig`], which canonicalize angles to
//! exact multiples of π/2 when within 1e-14.

use std::f64::consts::{FRAC_PI_2, PI};

/// Tolerance within which an angle is considered an exact multiple of π/2.
pub const SNAP_TOL: f64 = 1e-14;

/// Reduce an angle to (-π, π] and snap it to the nearest multiple of π/2 when
/// within [`SNAP_TOL`].
pub fn snap_angle(angle: f64) -> f64 {
    // reduce to (-pi, pi]
    let mut a = angle.rem_euclid(2.0 * PI);
    if a > PI + SNAP_TOL {
        a -= 2.0 * PI;
    }
    let quarter = (a / FRAC_PI_2).round();
    if (a - quarter * FRAC_PI_2).abs() <= SNAP_TOL {
        a = quarter * FRAC_PI_2;
    }
    a
}

/// Cosine and sine of an angle with exact values at multiples of π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnappedTrig {
    pub cos: f64,
    pub sin: f64,
}

/// Evaluate cos/sin of a (snapped) angle, returning exact 0/±1 at multiples of π/2.
pub fn snap_trig(angle: f64) -> SnappedTrig {
    let a = snap_angle(angle);
    let quarter = (a / FRAC_PI_2).round();
    if (a - quarter * FRAC_PI_2).abs() <= SNAP_TOL {
        let q = quarter.rem_euclid(4.0) as i64 % 4;
        let (cos, sin) = match q {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        };
        return SnappedTrig { cos, sin };
    }
    SnappedTrig {
        cos: a.cos(),
        sin: a.sin(),
    }
}

/// Neumaier-compensated accumulator; summation order fixed by the caller, so
/// results are bit-stable regardless of thread count.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Sum a slice in order with compensation.
pub fn compensated_sum(values: &[f64]) -> f64 {
    let mut acc = CompensatedSum::new();
    for &v in values {
        acc.add(v);
    }
    acc.value()
}

/// ln Γ(x) for x > 0 (Lanczos, g = 7, n = 9), accurate to ~1e-14 relative.
pub fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    if x < 0.5 {
        // reflection
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

/// Digamma function ψ(x) for x > 0 (asymptotic series after argument shift).
pub fn digamma(x: f64) -> f64 {
    assert!(x > 0.0, "digamma requires x > 0, got {x}");
    let mut x = x;
    let mut acc = 0.0;
    while x < 8.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Bernoulli-number tail in 1/x^2
    let inv2 = 1.0 / (x * x);
    acc + x.ln() - 0.5 / x
        - inv2
            * (1.0 / 12.0
                - inv2
                    * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))))
}

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
