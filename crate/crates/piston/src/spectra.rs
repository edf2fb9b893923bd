//! Transverse spectra {(λ, d(λ))} of −Δ_N for the supported cross sections:
//! d-sphere, unit disk with Dirichlet boundary, the degenerate point manifold,
//! and user-supplied files.
//!
//! Disk modes are the positive zeros of the Bessel functions J_n, located by a
//! sign-change scan (zero spacing exceeds the scan step for every order) and
//! polished by bisection-safeguarded Newton to |J_n| < 1e−13.  J_n itself is
//! evaluated by Miller's downward recurrence with the even-order normalization
//! J₀ + 2(J₂ + J₄ + …) = 1, so no external special-function dependency is
//! needed.

use std::path::Path;

use crate::error::{PistonError, Result};

/// One transverse eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseMode {
    pub lambda: f64,
    pub degeneracy: u64,
}

/// Ordered, complete-to-cutoff transverse spectrum.
#[derive(Debug, Clone)]
pub struct TransverseSpectrum {
    pub modes: Vec<TransverseMode>,
    pub manifold: String,
    /// Dimension d of the cross-section manifold.
    pub dimension: usize,
    pub lambda_max: f64,
}

impl TransverseSpectrum {
    fn validate(&self) -> Result<()> {
        let mut prev = -1.0;
        for (i, m) in self.modes.iter().enumerate() {
            if m.lambda < 0.0 || !m.lambda.is_finite() {
                return Err(PistonError::InvalidParameter(format!(
                    "mode {i}: lambda = {}",
                    m.lambda
                )));
            }
            if m.lambda < prev {
                return Err(PistonError::OrderingError { line: i + 1 });
            }
            prev = m.lambda;
        }
        Ok(())
    }
}

/// Exact integer degeneracy (2l+d−1)(l+d−2)!/(l!(d−1)!) of the l-th sphere level.
fn sphere_degeneracy(d: usize, l: u64) -> u64 {
    if l == 0 {
        return 1;
    }
    if d == 1 {
        return 2;
    }
    // (2l+d-1) * prod_{i=l+1}^{l+d-2} i / (d-1)!, reduced incrementally
    let mut num: u128 = 2 * l as u128 + d as u128 - 1;
    let mut den: u128 = 1;
    for i in 2..=(d as u128 - 1) {
        den *= i;
    }
    for i in (l + 1)..=(l + d as u64 - 2) {
        num *= i as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    (num / den) as u64
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Spectrum of the d-sphere: λ = √(l(l+d−1)) with the exact integer degeneracies.
pub fn sphere_spectrum(d: usize, lambda_max: f64) -> TransverseSpectrum {
    assert!(d >= 1 && lambda_max > 0.0);
    let mut modes = Vec::new();
    let mut l: u64 = 0;
    loop {
        let lambda = ((l * (l + d as u64 - 1)) as f64).sqrt();
        if lambda > lambda_max {
            break;
        }
        modes.push(TransverseMode {
            lambda,
            degeneracy: sphere_degeneracy(d, l),
        });
        l += 1;
    }
    TransverseSpectrum {
        modes,
        manifold: format!("sphere-{d}"),
        dimension: d,
        lambda_max,
    }
}

/// J_n(x) by Miller's downward recurrence (x ≥ 0).
pub fn bessel_jn(n: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    debug_assert!(x > 0.0);
    // starting order well above both n and x so the minimal solution dominates
    let start = (x.max(n as f64) + 14.0 * (x + 1.0).cbrt() + 22.0) as usize;
    let start = start + (start & 1); // even
    let mut jp = 0.0_f64; // J_{k+1}
    let mut j = 1e-300_f64; // J_k seed
    let mut norm = 0.0_f64;
    let mut value = if n == start { j } else { 0.0 };
    for k in (1..=start).rev() {
        let jm = (2.0 * k as f64 / x) * j - jp;
        jp = j;
        j = jm;
        if k - 1 == n {
            value = j;
        }
        if (k - 1) % 2 == 0 {
            norm += if k - 1 == 0 { j } else { 2.0 * j };
        }
        if j.abs() > 1e250 {
            let scale = 1e-250;
            j *= scale;
            jp *= scale;
            norm *= scale;
            value *= scale;
        }
    }
    value / norm
}

/// Derivative J_n'(x) from the recurrence relations.
fn bessel_jn_prime(n: usize, x: f64) -> f64 {
    if n == 0 {
        -bessel_jn(1, x)
    } else {
        0.5 * (bessel_jn(n - 1, x) - bessel_jn(n + 1, x))
    }
}

/// All positive zeros of J_n up to `upper`, ascending, polished to |J_n| < 1e−13.
pub fn bessel_zeros(n: usize, upper: f64) -> Result<Vec<f64>> {
    let mut zeros = Vec::new();
    // J_n > 0 on (0, j_{n,1}); consecutive zero spacing is > 2.4 for every
    // order, so a 0.5 step cannot skip a sign change
    let step = 0.5;
    let mut x0 = if n == 0 { 1e-3 } else { n as f64 * 0.5 };
    let mut f0 = bessel_jn(n, x0);
    while x0 < upper + step {
        let x1 = x0 + step;
        let f1 = bessel_jn(n, x1);
        if f0 == 0.0 {
            zeros.push(x0);
        } else if f0 * f1 < 0.0 {
            let z = refine_zero(n, x0, x1, f0)?;
            if z <= upper {
                zeros.push(z);
            }
        }
        x0 = x1;
        f0 = f1;
    }
    zeros.retain(|&z| z <= upper);
    Ok(zeros)
}

fn refine_zero(n: usize, mut lo: f64, mut hi: f64, f_lo: f64) -> Result<f64> {
    let mut sign_lo = f_lo.signum();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..100 {
        let f = bessel_jn(n, x);
        if f.abs() < 1e-14 {
            return Ok(x);
        }
        if f.signum() == sign_lo {
            lo = x;
        } else {
            hi = x;
        }
        sign_lo = bessel_jn(n, lo).signum();
        // Newton step, falling back to bisection when it leaves the bracket
        let d = bessel_jn_prime(n, x);
        let newton = x - f / d;
        x = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < 1e-15 * hi.max(1.0) {
            return Ok(x);
        }
    }
    let f = bessel_jn(n, x);
    if f.abs() < 1e-13 {
        Ok(x)
    } else {
        Err(PistonError::ConvergenceFailure {
            context: format!("J_{n} zero near {x}: residual {f:e}"),
        })
    }
}

/// Dirichlet spectrum of the unit disk: zeros of J_n, degeneracy 1 (n = 0) or 2.
pub fn disk_spectrum(lambda_max: f64) -> Result<TransverseSpectrum> {
    assert!(lambda_max > 0.0);
    let mut modes = Vec::new();
    let mut n = 0usize;
    loop {
        let zs = bessel_zeros(n, lambda_max)?;
        if zs.is_empty() {
            break;
        }
        let degeneracy = if n == 0 { 1 } else { 2 };
        for z in zs {
            modes.push(TransverseMode {
                lambda: z,
                degeneracy,
            });
        }
        n += 1;
    }
    modes.sort_by(|a, b| a.lambda.partial_cmp(&b.lambda).unwrap());
    Ok(TransverseSpectrum {
        modes,
        manifold: "disk".into(),
        dimension: 2,
        lambda_max,
    })
}

/// Degenerate point cross-section: the single mode (λ = 0, degeneracy 1).
pub fn point_spectrum() -> TransverseSpectrum {
    TransverseSpectrum {
        modes: vec![TransverseMode {
            lambda: 0.0,
            degeneracy: 1,
        }],
        manifold: "point".into(),
        dimension: 0,
        lambda_max: 0.0,
    }
}

/// Read a spectrum file: one "lambda degeneracy" pair per line, '#' comments.
pub fn load_spectrum(path: &Path, dimension: usize) -> Result<TransverseSpectrum> {
    let text = std::fs::read_to_string(path)?;
    let mut modes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let lambda: f64 = parts
            .next()
            .unwrap()
            .parse()
            .map_err(|e| PistonError::ParseError {
                line,
                message: format!("bad lambda: {e}"),
            })?;
        let degeneracy: i64 = parts
            .next()
            .ok_or(PistonError::ParseError {
                line,
                message: "missing degeneracy".into(),
            })?
            .parse()
            .map_err(|e| PistonError::ParseError {
                line,
                message: format!("bad degeneracy: {e}"),
            })?;
        if parts.next().is_some() {
            return Err(PistonError::ParseError {
                line,
                message: "expected exactly two columns".into(),
            });
        }
        if lambda < 0.0 || !lambda.is_finite() {
            return Err(PistonError::ParseError {
                line,
                message: format!("lambda must be finite and nonnegative, got {lambda}"),
            });
        }
        if degeneracy < 1 {
            return Err(PistonError::ParseError {
                line,
                message: format!("degeneracy must be a positive integer, got {degeneracy}"),
            });
        }
        if let Some(prev) = modes.last() {
            let prev: &TransverseMode = prev;
            if lambda < prev.lambda {
                return Err(PistonError::OrderingError { line });
            }
        }
        modes.push(TransverseMode {
            lambda,
            degeneracy: degeneracy as u64,
        });
    }
    let lambda_max = modes.last().map(|m| m.lambda).unwrap_or(0.0);
    let spectrum = TransverseSpectrum {
        modes,
        manifold: format!("file:{}", path.display()),
        dimension,
        lambda_max,
    };
    spectrum.validate()?;
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sphere_d2_first_levels() {
        let s = sphere_spectrum(2, 4.0);
        let expected = [
            (0.0, 1),
            (2f64.sqrt(), 3),
            (6f64.sqrt(), 5),
            (12f64.sqrt(), 7),
        ];
        assert_eq!(s.modes.len(), expected.len());
        for (m, (lam, deg)) in s.modes.iter().zip(expected) {
            assert_abs_diff_eq!(m.lambda, lam, epsilon = 1e-14);
            assert_eq!(m.degeneracy, deg);
        }
    }

    #[test]
    fn sphere_degeneracy_examples() {
        assert_eq!(sphere_degeneracy(3, 1), 4);
        assert_eq!(sphere_degeneracy(1, 1), 2);
        // d=2: 2l+1
        for l in 0..20 {
            assert_eq!(sphere_degeneracy(2, l), if l == 0 { 1 } else { 2 * l + 1 });
        }
        // sum over l <= lmax for d=2 equals (lmax+1)^2
        let total: u64 = (0..=9).map(|l| sphere_degeneracy(2, l)).sum();
        assert_eq!(total, 100);
    }

    #[test]
    fn bessel_small_arguments_match_series() {
        // J_0(x) = 1 - x^2/4 + x^4/64 - ..., J_1(x) = x/2 - x^3/16 + ...
        let x = 0.01_f64;
        assert_abs_diff_eq!(
            bessel_jn(0, x),
            1.0 - x * x / 4.0 + x.powi(4) / 64.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            bessel_jn(1, x),
            x / 2.0 - x.powi(3) / 16.0 + x.powi(5) / 384.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn bessel_known_values() {
        // reference values (Abramowitz & Stegun tables)
        assert_abs_diff_eq!(bessel_jn(0, 1.0), 0.765_197_686_557_966_6, epsilon = 1e-13);
        assert_abs_diff_eq!(bessel_jn(1, 1.0), 0.440_050_585_744_933_5, epsilon = 1e-13);
        assert_abs_diff_eq!(bessel_jn(2, 1.0), 0.114_903_484_931_900_48, epsilon = 1e-13);
        assert_abs_diff_eq!(bessel_jn(0, 10.0), -0.245_935_764_451_348_4, epsilon = 1e-12);
        assert_abs_diff_eq!(bessel_jn(5, 20.0), 0.151_169_767_982_163_5, epsilon = 1e-12);
    }

    #[test]
    fn first_bessel_zeros() {
        let z0 = bessel_zeros(0, 10.0).unwrap();
        assert_abs_diff_eq!(z0[0], 2.404_825_557_695_773, epsilon = 1e-12);
        assert_abs_diff_eq!(z0[1], 5.520_078_110_286_311, epsilon = 1e-12);
        let z1 = bessel_zeros(1, 10.0).unwrap();
        assert_abs_diff_eq!(z1[0], 3.831_705_970_207_512, epsilon = 1e-12);
    }

    #[test]
    fn disk_spectrum_ordering_and_degeneracy() {
        let s = disk_spectrum(8.0).unwrap();
        assert!(!s.modes.is_empty());
        let mut prev = 0.0;
        for m in &s.modes {
            assert!(m.lambda >= prev);
            prev = m.lambda;
            assert!(m.degeneracy == 1 || m.degeneracy == 2);
        }
        // lowest disk mode is the first J_0 zero
        assert_abs_diff_eq!(s.modes[0].lambda, 2.404_825_557_695_773, epsilon = 1e-12);
        assert_eq!(s.modes[0].degeneracy, 1);
        assert_eq!(s.modes[1].degeneracy, 2); // first J_1 zero
    }

    #[test]
    fn interlacing_of_zero_sets() {
        for n in 0..10 {
            let zn = bessel_zeros(n, 60.0).unwrap();
            let zn1 = bessel_zeros(n + 1, 60.0).unwrap();
            for (i, &z) in zn1.iter().enumerate() {
                assert!(z > zn[i], "J_{} zero {} not above J_{} zero {}", n + 1, z, n, zn[i]);
                if i + 1 < zn.len() {
                    assert!(z < zn[i + 1]);
                }
            }
        }
    }

    #[test]
    fn spectrum_file_round_trip() {
        let dir = std::env::temp_dir();
        let path = dir.join("piston_spectrum_test.txt");
        std::fs::write(&path, "# sphere d=2 prefix\n0 1\n1.4142135624 3\n").unwrap();
        let s = load_spectrum(&path, 2).unwrap();
        assert_eq!(s.modes.len(), 2);
        assert_eq!(s.modes[1].degeneracy, 3);

        std::fs::write(&path, "2.0 1\n1.0 1\n").unwrap();
        assert!(matches!(
            load_spectrum(&path, 1),
            Err(PistonError::OrderingError { line: 2 })
        ));

        std::fs::write(&path, "1.0 -2\n").unwrap();
        assert!(matches!(
            load_spectrum(&path, 1),
            Err(PistonError::ParseError { line: 1, .. })
        ));
        let _ = std::fs::remove_file(&path);
    }
}
