//! Special functions: Bessel J of integer and half-integer order, their
//! positive zeros, associated Legendre functions and spherical harmonics.
//!
//! All reconstruction formulas in this crate reduce to these primitives: the
//! disk and ball eigenbases are built from Bessel radial profiles, the Riesz
//! frequency sequences are Bessel zeros, and the spherical masks are
//! (unnormalized) spherical harmonics.

mod bessel;
mod legendre;

pub use bessel::{bessel_j, bessel_j_prime, bessel_zeros, spherical_bessel_j};
pub use legendre::{
    assoc_legendre, spherical_harmonic, spherical_harmonic_norm_constant,
};

use thiserror::Error;

/// Errors from the special-function layer.
#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("negative argument x = {0} is outside the domain")]
    NegativeArgument(f64),
    #[error("argument x = {0} is outside [-1, 1]")]
    OutsideInterval(f64),
    #[error("zero count must be >= 1")]
    EmptyZeroRequest,
    #[error("zero search for order nu = {nu} failed to converge near x = {near}")]
    ZeroSearchFailed { nu: f64, near: f64 },
    #[error("|m| = {m} exceeds degree l = {l}")]
    InvalidDegreeOrder { l: u32, m: i32 },
}

/// Order nu >= 0 of a Bessel function, stored as 2*nu so integer and
/// half-integer orders share one exact representation.
///
/// Half-integer orders reduce to closed trigonometric forms, e.g.
/// J_{1/2}(x) = sqrt(2/(pi x)) sin x; the evaluation engine exploits this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BesselOrder {
    twice: u32,
}

impl BesselOrder {
    /// Integer order nu = n.
    pub fn integer(n: u32) -> Self {
        Self { twice: 2 * n }
    }

    /// Half-integer order nu = n + 1/2.
    pub fn half_integer(n: u32) -> Self {
        Self { twice: 2 * n + 1 }
    }

    /// Order from its doubled value (2*nu).
    pub fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn nu(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }
}

impl std::fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// The first positive zeros j_{nu,1} < j_{nu,2} < ... of J_nu.
///
/// Immutable after construction; consecutive gaps converge to pi and are
/// monotone (increasing for nu < 1/2, constant at 1/2, decreasing above).
#[derive(Clone, Debug)]
pub struct ZeroTable {
    order: BesselOrder,
    zeros: Vec<f64>,
}

impl ZeroTable {
    pub(crate) fn new(order: BesselOrder, zeros: Vec<f64>) -> Self {
        Self { order, zeros }
    }

    pub fn order(&self) -> BesselOrder {
        self.order
    }

    /// n-th positive zero, 1-based.
    pub fn zero(&self, n: usize) -> f64 {
        self.zeros[n - 1]
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Consecutive gaps j_{nu,n+1} - j_{nu,n}.
    pub fn gaps(&self) -> Vec<f64> {
        self.zeros.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn order_representation() {
        assert_eq!(BesselOrder::integer(3).nu(), 3.0);
        assert_eq!(BesselOrder::half_integer(2).nu(), 2.5);
        assert!(BesselOrder::integer(0).is_integer());
        assert!(!BesselOrder::half_integer(0).is_integer());
        assert_eq!(format!("{}", BesselOrder::half_integer(1)), "3/2");
    }

    #[test]
    fn zero_table_gaps() {
        let table = bessel_zeros(BesselOrder::half_integer(0), 3).unwrap();
        assert_abs_diff_eq!(table.zero(1), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(table.zero(2), 2.0 * PI, epsilon = 1e-12);
        assert_abs_diff_eq!(table.zero(3), 3.0 * PI, epsilon = 1e-12);
        for g in table.gaps() {
            assert_abs_diff_eq!(g, PI, epsilon = 1e-11);
        }
    }
}
