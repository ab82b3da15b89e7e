use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
// Published coefficient digits, kept verbatim.
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Value and reciprocal of `Γ(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaEval {
    pub argument: Complex64,
    /// `None` at the poles `z = 0, -1, -2, ...`.
    pub value: Option<Complex64>,
    pub reciprocal: Complex64,
}

/// `sin(πx)`, exactly zero at integers.
fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r <= -1.0 {
        r += 2.0;
    }
    // r in (-1, 1]; reflect into [-1/2, 1/2].
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    if r == 0.0 {
        0.0
    } else {
        (PI * r).sin()
    }
}

fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn sin_pi_complex(z: Complex64) -> Complex64 {
    let (y, x) = (PI * z.im, z.re);
    Complex64::new(sin_pi(x) * y.cosh(), cos_pi(x) * y.sinh())
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `ln Γ(z)` on the principal branch for `Re z >= 1/2`, with the Lanczos series.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let zm = z - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (zm + i as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (zm + 0.5) * t.ln() - t + series.ln()
}

/// `1/Γ(z)`, an entire function; exactly zero at non-positive integers.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        // 1/Γ(z) = sin(πz) Γ(1-z) / π
        sin_pi_complex(z) * ln_gamma_right(1.0 - z).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// `Γ(z)`; errors at the poles.
pub fn gamma_value(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::GammaPole(z.re));
    }
    if z.re < 0.5 {
        Ok(PI / (sin_pi_complex(z) * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

pub fn gamma(z: Complex64) -> GammaEval {
    GammaEval { argument: z, value: gamma_value(z).ok(), reciprocal: reciprocal_gamma(z) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn classical_values() {
        assert!(rel(gamma_value(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(gamma_value(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0)) < 1e-14);
        assert!(rel(gamma_value(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-13);
    }

    #[test]
    fn factorials() {
        let mut fact = 1.0f64;
        for n in 1..=25u32 {
            let g = gamma_value(c(n as f64, 0.0)).unwrap();
            assert!(rel(g, c(fact, 0.0)) < 1e-13, "Γ({n})");
            fact *= n as f64;
        }
    }

    #[test]
    fn half_integers_on_the_negative_axis() {
        // Γ(-1/2) = -2√π, Γ(-3/2) = 4√π/3
        let s = PI.sqrt();
        assert!(rel(gamma_value(c(-0.5, 0.0)).unwrap(), c(-2.0 * s, 0.0)) < 1e-14);
        assert!(rel(gamma_value(c(-1.5, 0.0)).unwrap(), c(4.0 * s / 3.0, 0.0)) < 1e-14);
    }

    #[test]
    fn poles_and_reciprocal_zeros() {
        for n in 0..60 {
            let z = c(-(n as f64), 0.0);
            assert!(matches!(gamma_value(z), Err(Error::GammaPole(_))));
            let g = gamma(z);
            assert!(g.value.is_none());
            assert_eq!(g.reciprocal, c(0.0, 0.0));
        }
    }

    #[test]
    fn imaginary_axis_modulus() {
        // |Γ(iy)|² = π / (y sinh πy)
        for y in [0.3, 1.0, 2.5, 7.0] {
            let g = gamma_value(c(0.0, y)).unwrap();
            let exact = PI / (y * (PI * y).sinh());
            assert!((g.norm_sqr() - exact).abs() / exact < 1e-13);
        }
    }

    #[test]
    fn sin_pi_is_exact_at_integers() {
        for k in -50..=50 {
            assert_eq!(sin_pi(k as f64), 0.0);
        }
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert!((sin_pi(1.25) - (PI * 1.25).sin()).abs() < 1e-15);
    }

    /// Deterministic quasi-random points in the disc |z| ≤ 20 (R2 sequence).
    fn sample_points(count: usize) -> Vec<Complex64> {
        let (a1, a2) = (0.754_877_666_246_692_8, 0.569_840_290_998_053_3);
        (1..=count)
            .map(|k| {
                let (u, v) = ((k as f64 * a1).fract(), (k as f64 * a2).fract());
                Complex64::from_polar(19.5 * u.sqrt(), 2.0 * PI * v)
            })
            .collect()
    }

    #[test]
    fn recurrence_on_quasi_random_points() {
        for z in sample_points(100) {
            if z.im.abs() < 1e-3 && z.re <= 0.0 && (z.re - z.re.round()).abs() < 1e-3 {
                continue;
            }
            let lhs = gamma_value(z + 1.0).unwrap();
            let rhs = z * gamma_value(z).unwrap();
            assert!(rel(lhs, rhs) < 1e-11, "z = {z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn reflection_formula() {
        for z in sample_points(100).into_iter().map(|z| z / 4.0) {
            let lhs = gamma_value(z).unwrap() * gamma_value(1.0 - z).unwrap();
            let s = (z * PI).sin();
            let rhs = Complex64::new(PI, 0.0) / s;
            assert!(rel(lhs, rhs) < 1e-10, "z = {z}");
        }
    }

    #[test]
    fn value_times_reciprocal_is_one() {
        for z in sample_points(100) {
            let g = gamma(z);
            if let Some(v) = g.value {
                if v.norm().is_finite() && v.norm() > 0.0 {
                    assert!((v * g.reciprocal - 1.0).norm() < 1e-12, "z = {z}");
                }
            }
        }
    }
}
