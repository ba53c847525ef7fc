//! Associated Legendre functions and spherical harmonics.
//!
//! Condon-Shortley sign convention throughout (P_1^1 = -sqrt(1-x^2)).
//! Spherical harmonics default to the bare form P_l^m(cos theta) e^{im phi};
//! the orthonormalization constant is exposed separately because stability
//! constants for the ball implicitly assume an orthonormal angular basis.

use super::SpecFunError;
use num_complex::Complex64;
use std::f64::consts::PI;

/// P_l^m(x) by the stable three-term recurrence in l.
pub fn assoc_legendre(l: u32, m: i32, x: f64) -> Result<f64, SpecFunError> {
    if m.unsigned_abs() > l {
        return Err(SpecFunError::InvalidDegreeOrder { l, m });
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(SpecFunError::OutsideInterval(x));
    }
    let mm = m.unsigned_abs();
    let p = assoc_legendre_nonneg(l, mm, x);
    if m >= 0 {
        Ok(p)
    } else {
        // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
        let sign = if mm % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * factorial_ratio(l, mm) * p)
    }
}

/// (l-m)!/(l+m)! for m >= 0.
fn factorial_ratio(l: u32, m: u32) -> f64 {
    let mut r = 1.0;
    for i in (l - m + 1)..=(l + m) {
        r /= i as f64;
    }
    r
}

fn assoc_legendre_nonneg(l: u32, m: u32, x: f64) -> f64 {
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    let somx2 = ((1.0 - x) * (1.0 + x)).sqrt();
    let mut pmm = 1.0;
    for i in 1..=m {
        pmm *= -((2 * i - 1) as f64) * somx2;
    }
    if l == m {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p_curr = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return p_curr;
    }
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        let p_next =
            (x * (2.0 * llf - 1.0) * p_curr - (llf + mf - 1.0) * p_prev) / (llf - mf);
        p_prev = p_curr;
        p_curr = p_next;
    }
    p_curr
}

/// Y_l^m(theta, phi) = P_l^m(cos theta) e^{im phi}, optionally multiplied by
/// the orthonormalization constant sqrt((2l+1)(l-m)!/(4 pi (l+m)!)).
pub fn spherical_harmonic(
    l: u32,
    m: i32,
    theta: f64,
    phi: f64,
    normalized: bool,
) -> Result<Complex64, SpecFunError> {
    let p = assoc_legendre(l, m, theta.cos())?;
    let phase = Complex64::new(0.0, m as f64 * phi).exp();
    let scale = if normalized {
        spherical_harmonic_norm_constant(l, m)?
    } else {
        1.0
    };
    Ok(scale * p * phase)
}

/// sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!), the factor taking the bare harmonic
/// to the orthonormal one.
pub fn spherical_harmonic_norm_constant(l: u32, m: i32) -> Result<f64, SpecFunError> {
    if m.unsigned_abs() > l {
        return Err(SpecFunError::InvalidDegreeOrder { l, m });
    }
    let ratio = if m >= 0 {
        factorial_ratio(l, m as u32)
    } else {
        1.0 / factorial_ratio(l, m.unsigned_abs())
    };
    Ok(((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn low_degree_values() {
        assert_eq!(assoc_legendre(0, 0, 0.3).unwrap(), 1.0);
        assert_abs_diff_eq!(assoc_legendre(1, 0, -0.7).unwrap(), -0.7, epsilon = 1e-15);
        // Condon-Shortley: P_1^1 = -sqrt(1-x^2)
        assert_abs_diff_eq!(
            assoc_legendre(1, 1, 0.5).unwrap(),
            -(0.75f64).sqrt(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(assoc_legendre(2, 3, 0.0).is_err());
        assert!(assoc_legendre(2, 1, 1.5).is_err());
    }

    #[test]
    fn harmonic_trivial_cases() {
        let y00 = spherical_harmonic(0, 0, 1.1, 2.2, false).unwrap();
        assert_abs_diff_eq!(y00.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(y00.im, 0.0, epsilon = 1e-15);
        let y10 = spherical_harmonic(1, 0, 1.1, 0.4, false).unwrap();
        assert_abs_diff_eq!(y10.re, 1.1f64.cos(), epsilon = 1e-15);
    }

    #[test]
    fn negative_m_symmetry() {
        // Y_l^{-m} = (-1)^m conj(Y_l^m) in the bare convention
        let y = spherical_harmonic(3, 2, 0.9, 0.7, false).unwrap();
        let ym = spherical_harmonic(3, -2, 0.9, 0.7, false).unwrap();
        let expect = y.conj() * factorial_ratio(3, 2);
        assert_abs_diff_eq!(ym.re, expect.re, epsilon = 1e-14);
        assert_abs_diff_eq!(ym.im, expect.im, epsilon = 1e-14);
    }
}
