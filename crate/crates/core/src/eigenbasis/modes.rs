//! Dirichlet-Laplacian eigenfunctions for the three supported domains.

use super::{EigenError, ScalarField};
use crate::specfun::{
    bessel_j, bessel_j_prime, bessel_zeros, spherical_bessel_j, spherical_harmonic, BesselOrder,
};
use num_complex::Complex64;
use std::f64::consts::PI;

/// phi_{n,k}(x1, x2) = 2 sin(n pi x1) sin(k pi x2), eigenvalue pi sqrt(n^2+k^2).
#[derive(Clone, Copy, Debug)]
pub struct SquareEigen {
    pub n: u32,
    pub k: u32,
    /// Square root of the Laplace eigenvalue: lambda_{n,k} = pi sqrt(n^2 + k^2).
    pub lambda: f64,
}

impl SquareEigen {
    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        2.0 * (self.n as f64 * PI * x1).sin() * (self.k as f64 * PI * x2).sin()
    }

    /// Samples on the interior grid with J nodes per side.
    pub fn sample(&self, j: usize) -> ScalarField {
        ScalarField::from_fn(j, |x1, x2| self.eval(x1, x2))
    }
}

pub fn square_eigen(n: u32, k: u32) -> Result<SquareEigen, EigenError> {
    if n == 0 || k == 0 {
        return Err(EigenError::InvalidIndex(format!(
            "square mode requires n, k >= 1, got ({n}, {k})"
        )));
    }
    let lambda = PI * ((n * n + k * k) as f64).sqrt();
    Ok(SquareEigen { n, k, lambda })
}

/// Disk eigenfunction in polar coordinates:
/// phi_{n,k}(rho, theta) = sqrt(2)/|J_n'(j_{n,k})| J_n(j_{n,k} rho) e^{i n theta}.
#[derive(Clone, Copy, Debug)]
pub struct DiskEigen {
    pub n: i32,
    pub k: u32,
    /// j_{|n|,k}, the square root of the eigenvalue.
    pub lambda: f64,
    /// Normal-derivative weight c_{n,k} = sqrt(2) j_{n,k} sign(J_n'(j_{n,k})).
    pub boundary_weight: f64,
    radial_scale: f64,
    angular_sign: f64,
}

impl DiskEigen {
    pub fn eval(&self, rho: f64, theta: f64) -> Complex64 {
        let m = self.n.unsigned_abs();
        let radial = bessel_j(BesselOrder::integer(m), self.lambda * rho).expect("rho >= 0");
        let phase = Complex64::new(0.0, self.n as f64 * theta).exp();
        self.angular_sign * self.radial_scale * radial * phase
    }
}

pub fn disk_eigen(n: i32, k: u32) -> Result<DiskEigen, EigenError> {
    if k == 0 {
        return Err(EigenError::InvalidIndex(format!(
            "disk mode requires k >= 1, got k = {k}"
        )));
    }
    let m = n.unsigned_abs();
    let order = BesselOrder::integer(m);
    let table = bessel_zeros(order, k as usize)
        .map_err(|e| EigenError::InvalidIndex(e.to_string()))?;
    let lambda = table.zero(k as usize);
    let deriv = bessel_j_prime(order, lambda).expect("lambda > 0");
    // J_{-m} = (-1)^m J_m flips both the radial profile and the weight sign
    let angular_sign = if n < 0 && m % 2 == 1 { -1.0 } else { 1.0 };
    Ok(DiskEigen {
        n,
        k,
        lambda,
        boundary_weight: angular_sign * 2.0_f64.sqrt() * lambda * deriv.signum(),
        radial_scale: 2.0_f64.sqrt() / deriv.abs(),
        angular_sign,
    })
}

/// Ball eigenfunction in spherical coordinates with orthonormal harmonics:
/// phi_{n,k,l} = sqrt(2)/|j_n'(j_{n+1/2,k})| j_n(j_{n+1/2,k} rho) Y_n^l(theta, phi).
#[derive(Clone, Copy, Debug)]
pub struct BallEigen {
    pub n: u32,
    pub k: u32,
    pub l: i32,
    /// j_{n+1/2,k}, the square root of the eigenvalue.
    pub lambda: f64,
    /// c_{n,k} = sqrt(2) j_{n+1/2,k} sign(j_n'(j_{n+1/2,k})).
    pub boundary_weight: f64,
    radial_scale: f64,
}

impl BallEigen {
    pub fn eval(&self, rho: f64, theta: f64, phi: f64) -> Complex64 {
        let radial = if rho == 0.0 {
            if self.n == 0 {
                1.0
            } else {
                0.0
            }
        } else {
            spherical_bessel_j(self.n, self.lambda * rho)
        };
        let angular =
            spherical_harmonic(self.n, self.l, theta, phi, true).expect("valid (n, l) checked");
        self.radial_scale * radial * angular
    }
}

pub fn ball_eigen(n: u32, k: u32, l: i32) -> Result<BallEigen, EigenError> {
    if k == 0 || l.unsigned_abs() > n {
        return Err(EigenError::InvalidIndex(format!(
            "ball mode requires k >= 1 and |l| <= n, got (n, k, l) = ({n}, {k}, {l})"
        )));
    }
    let order = BesselOrder::half_integer(n);
    let table = bessel_zeros(order, k as usize)
        .map_err(|e| EigenError::InvalidIndex(e.to_string()))?;
    let lambda = table.zero(k as usize);
    // j_n'(x) = sqrt(pi/(2x)) (J'_{n+1/2}(x) - J_{n+1/2}(x)/(2x)); at a zero of
    // J_{n+1/2} the second term drops, so the signs agree and
    // |j_n'(lambda)| = sqrt(pi/(2 lambda)) |J'_{n+1/2}(lambda)|.
    let jprime = bessel_j_prime(order, lambda).expect("lambda > 0");
    let sph_prime = (PI / (2.0 * lambda)).sqrt() * jprime;
    Ok(BallEigen {
        n,
        k,
        l,
        lambda,
        boundary_weight: 2.0_f64.sqrt() * lambda * sph_prime.signum(),
        radial_scale: 2.0_f64.sqrt() / sph_prime.abs(),
    })
}
