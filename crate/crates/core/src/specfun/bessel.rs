//! Bessel J evaluation and zero finding.
//!
//! Evaluation strategy: truncated ascending series for small arguments,
//! where the alternating terms decay before cancellation can build up;
//! elsewhere Miller backward recurrence (integer orders, normalized by the
//! Neumann sum J_0 + 2 J_2 + 2 J_4 + ... = 1) or the closed trigonometric
//! forms of the spherical Bessel functions (half-integer orders).

use super::{BesselOrder, SpecFunError, ZeroTable};
use std::f64::consts::PI;

/// Below this the ascending series is used for every order.
const SERIES_CUTOFF: f64 = 9.0;

/// J_nu(x) for x >= 0.
///
/// Accuracy is near machine precision over the supported range
/// (x <= ~500, nu <= ~300); values below the double-precision underflow
/// threshold flush to zero.
pub fn bessel_j(order: BesselOrder, x: f64) -> Result<f64, SpecFunError> {
    if x.is_nan() || x < 0.0 {
        return Err(SpecFunError::NegativeArgument(x));
    }
    if x == 0.0 {
        return Ok(if order.twice() == 0 { 1.0 } else { 0.0 });
    }
    if x < SERIES_CUTOFF {
        return Ok(ascending_series(order, x));
    }
    if order.is_integer() {
        Ok(miller_integer(order.twice() / 2, x))
    } else {
        let n = (order.twice() - 1) / 2;
        Ok((2.0 * x / PI).sqrt() * spherical_bessel_j(n, x))
    }
}

/// J'_nu(x), evaluated through the recurrence identity
/// J'_nu = (J_{nu-1} - J_{nu+1})/2 = (nu/x) J_nu - J_{nu+1}
/// (the second form avoids negative orders for nu < 1).
pub fn bessel_j_prime(order: BesselOrder, x: f64) -> Result<f64, SpecFunError> {
    if x.is_nan() || x < 0.0 {
        return Err(SpecFunError::NegativeArgument(x));
    }
    let twice = order.twice();
    if x == 0.0 {
        // limits of the series term-by-term derivative
        return Ok(match twice {
            0 => 0.0,
            2 => 0.5,
            t if t < 2 => f64::INFINITY,
            _ => 0.0,
        });
    }
    if twice == 0 {
        return Ok(-bessel_j(BesselOrder::integer(1), x)?);
    }
    if twice >= 2 {
        let lo = bessel_j(BesselOrder::from_twice(twice - 2), x)?;
        let hi = bessel_j(BesselOrder::from_twice(twice + 2), x)?;
        Ok(0.5 * (lo - hi))
    } else {
        // nu = 1/2
        let j = bessel_j(order, x)?;
        let hi = bessel_j(BesselOrder::from_twice(twice + 2), x)?;
        Ok(order.nu() / x * j - hi)
    }
}

/// Spherical Bessel function j_n(x) = sqrt(pi/(2x)) J_{n+1/2}(x), x > 0.
///
/// Upward recurrence from the closed forms of j_0, j_1 while n < x,
/// backward recurrence normalized against j_0 or j_1 otherwise.
pub fn spherical_bessel_j(n: u32, x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let j0 = x.sin() / x;
    if n == 0 {
        return j0;
    }
    let j1 = x.sin() / (x * x) - x.cos() / x;
    if n == 1 {
        return j1;
    }
    if (n as f64) < x {
        let mut a = j0;
        let mut b = j1;
        for k in 1..n {
            let c = (2.0 * k as f64 + 1.0) / x * b - a;
            a = b;
            b = c;
        }
        b
    } else {
        let start = n as usize + 20 + (12.0 * (n as f64).cbrt()) as usize;
        let mut fkp1 = 0.0_f64;
        let mut fk = 1e-300_f64;
        let mut target = f64::NAN;
        let mut k = start;
        while k > 0 {
            let fkm1 = (2.0 * k as f64 + 1.0) / x * fk - fkp1;
            fkp1 = fk;
            fk = fkm1;
            k -= 1;
            if k == n as usize {
                target = fk;
            }
            if fk.abs() > 1e250 {
                fk *= 1e-250;
                fkp1 *= 1e-250;
                target *= 1e-250;
            }
        }
        // fk = f_0, fkp1 = f_1; at least one of j_0, j_1 is O(1/x)
        if j0.abs() >= j1.abs() {
            target * j0 / fk
        } else {
            target * j1 / fkp1
        }
    }
}

/// Ascending series sum over scaled terms; the leading term is formed in
/// log space so large orders underflow cleanly instead of overflowing.
fn ascending_series(order: BesselOrder, x: f64) -> f64 {
    let nu = order.nu();
    let log_t0 = nu * (x / 2.0).ln() - ln_gamma_nu_plus_1(order.twice());
    let t0 = log_t0.exp();
    if t0 == 0.0 {
        return 0.0;
    }
    let q = x * x / 4.0;
    let mut term = t0;
    let mut sum = t0;
    let mut scale = t0;
    for k in 0..400u32 {
        term *= -q / ((k as f64 + 1.0) * (nu + k as f64 + 1.0));
        sum += term;
        scale = scale.max(term.abs());
        if term.abs() < 1e-18 * scale && (k as f64) > x / 2.0 {
            break;
        }
    }
    sum
}

/// Miller backward recurrence for integer orders, x >= SERIES_CUTOFF.
fn miller_integer(n: u32, x: f64) -> f64 {
    let base = (n as f64).max(x);
    let mut start = base as usize + 20 + (12.0 * base.cbrt()) as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut fkp1 = 0.0_f64;
    let mut fk = 1e-300_f64;
    let mut even_sum = fk; // start index is even
    let mut target = f64::NAN;
    let mut k = start;
    while k > 0 {
        let fkm1 = (2.0 * k as f64 / x) * fk - fkp1;
        fkp1 = fk;
        fk = fkm1;
        k -= 1;
        if k == n as usize {
            target = fk;
        }
        if k > 0 && k % 2 == 0 {
            even_sum += fk;
        }
        if fk.abs() > 1e250 {
            fk *= 1e-250;
            fkp1 *= 1e-250;
            even_sum *= 1e-250;
            target *= 1e-250;
        }
    }
    // Neumann sum: J_0 + 2 sum_{j>=1} J_{2j} = 1
    let norm = fk + 2.0 * even_sum;
    target / norm
}

/// ln Gamma(nu + 1) for nu = twice/2, exact to the factorial structure.
fn ln_gamma_nu_plus_1(twice: u32) -> f64 {
    if twice % 2 == 0 {
        let n = twice / 2;
        (1..=n).map(|i| (i as f64).ln()).sum()
    } else {
        // Gamma(n + 3/2) = (n + 1/2)(n - 1/2)...(1/2) Gamma(1/2)
        let n = (twice - 1) / 2;
        let mut s = 0.5 * PI.ln();
        for i in 0..=n {
            s += (i as f64 + 0.5).ln();
        }
        s
    }
}

/// First `count` positive zeros of J_nu, each to ~1e-13 absolute.
///
/// Brackets come from a sign scan (gaps between consecutive zeros exceed 3.1
/// for every supported order, so a unit step cannot skip a zero); within a
/// bracket the McMahon asymptotic value seeds a bisection-safeguarded Newton
/// iteration.
pub fn bessel_zeros(order: BesselOrder, count: usize) -> Result<ZeroTable, SpecFunError> {
    if count == 0 {
        return Err(SpecFunError::EmptyZeroRequest);
    }
    let mut zeros = Vec::with_capacity(count);
    let mut prev = 0.0_f64;
    for n in 1..=count {
        let scan_from = if n == 1 {
            if order.twice() == 0 {
                0.4
            } else {
                order.nu() + 0.01
            }
        } else {
            prev + 2.8
        };
        let (a, b) = scan_bracket(order, scan_from)?;
        let guess = mcmahon_guess(order, n);
        let z = refine_zero(order, a, b, guess)?;
        zeros.push(z);
        prev = z;
    }
    Ok(ZeroTable::new(order, zeros))
}

/// McMahon expansion j_{nu,n} ~ beta - (mu - 1)/(8 beta), mu = 4 nu^2.
fn mcmahon_guess(order: BesselOrder, n: usize) -> f64 {
    let nu = order.nu();
    let beta = (n as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    beta - (mu - 1.0) / (8.0 * beta)
}

/// Walk right from `from` in unit steps until J changes sign.
fn scan_bracket(order: BesselOrder, from: f64) -> Result<(f64, f64), SpecFunError> {
    let mut a = from;
    let mut fa = bessel_j(order, a).expect("x > 0");
    // Directly on a zero: nudge.
    if fa == 0.0 {
        a += 1e-9;
        fa = bessel_j(order, a).expect("x > 0");
    }
    for _ in 0..100_000 {
        let b = a + 1.0;
        let fb = bessel_j(order, b).expect("x > 0");
        if fa.signum() != fb.signum() {
            return Ok((a, b));
        }
        a = b;
        fa = fb;
    }
    Err(SpecFunError::ZeroSearchFailed {
        nu: order.nu(),
        near: from,
    })
}

fn refine_zero(order: BesselOrder, a0: f64, b0: f64, guess: f64) -> Result<f64, SpecFunError> {
    let f = |x: f64| bessel_j(order, x).expect("x > 0");
    let df = |x: f64| bessel_j_prime(order, x).expect("x > 0");
    let (mut a, mut b) = (a0, b0);
    let mut fa = f(a);
    let mut x = if guess > a + 1e-3 && guess < b - 1e-3 {
        guess
    } else {
        0.5 * (a + b)
    };
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let d = df(x);
        let mut next = x - fx / d;
        if !(next > a && next < b) || !next.is_finite() {
            next = 0.5 * (a + b);
        }
        if (next - x).abs() < 1e-15 * x.max(1.0) {
            return Ok(next);
        }
        x = next;
    }
    Err(SpecFunError::ZeroSearchFailed {
        nu: order.nu(),
        near: 0.5 * (a0 + b0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j(BesselOrder::integer(0), 0.0).unwrap(), 1.0);
    }

    #[test]
    fn half_order_at_pi_vanishes() {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x
        let v = bessel_j(BesselOrder::half_integer(0), PI).unwrap();
        assert!(v.abs() < 1e-12, "J_1/2(pi) = {v}");
    }

    #[test]
    fn negative_argument_rejected() {
        assert!(bessel_j(BesselOrder::integer(0), -1.0).is_err());
        assert!(bessel_j_prime(BesselOrder::integer(1), -0.5).is_err());
    }

    #[test]
    fn prime_values_at_origin() {
        assert_eq!(bessel_j_prime(BesselOrder::integer(0), 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(BesselOrder::integer(1), 0.0).unwrap(), 0.5);
    }

    #[test]
    fn first_zero_of_j0() {
        let t = bessel_zeros(BesselOrder::integer(0), 1).unwrap();
        assert_abs_diff_eq!(t.zero(1), 2.404825557695773, epsilon = 1e-12);
    }

    #[test]
    fn prime_at_first_zero_of_j0() {
        let t = bessel_zeros(BesselOrder::integer(0), 1).unwrap();
        let d = bessel_j_prime(BesselOrder::integer(0), t.zero(1)).unwrap();
        assert_abs_diff_eq!(d, -0.5191474972894669, epsilon = 1e-12);
    }

    #[test]
    fn zero_count_must_be_positive() {
        assert!(bessel_zeros(BesselOrder::integer(0), 0).is_err());
    }

    #[test]
    fn zero_gap_facts_for_j0() {
        let t = bessel_zeros(BesselOrder::integer(0), 2).unwrap();
        assert!(t.zero(2) - t.zero(1) >= 3.115);
        assert!(2.0 * t.zero(1) >= 4.8);
    }

    #[test]
    fn large_order_miller_consistent_with_series() {
        // continuity across the series/Miller boundary via the recurrence
        // J_{n-1}(x) + J_{n+1}(x) = (2n/x) J_n(x) evaluated at x > cutoff
        for &(n, x) in &[(5u32, 12.0), (40, 35.0), (150, 160.0), (280, 300.0)] {
            let jm = bessel_j(BesselOrder::integer(n - 1), x).unwrap();
            let j = bessel_j(BesselOrder::integer(n), x).unwrap();
            let jp = bessel_j(BesselOrder::integer(n + 1), x).unwrap();
            let resid = jm + jp - (2.0 * n as f64 / x) * j;
            assert!(resid.abs() < 1e-13, "n={n} x={x} resid={resid}");
        }
    }
}
