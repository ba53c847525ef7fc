//! Exact truncated-series measurement oracles.
//!
//! These evaluate the measurement series directly from coefficients and are
//! the noiseless reference for both the finite-difference forward model and
//! the frame-operator recovery.

use super::{MeasurementSet, Side, Surface};
use crate::eigenbasis::{ball_eigen, disk_eigen, CoeffGrid};
use crate::specfun::{bessel_zeros, BesselOrder};
use ndarray::Array2;
use std::f64::consts::PI;

/// Which measurement series a row follows.
#[derive(Clone, Copy, Debug)]
pub enum SeriesModel {
    /// g_l(t) = sum_n a_n (-1)^n sqrt(2) pi n cos(pi sqrt(n^2 + l^2) t);
    /// `mask` is the trigonometric mask index l >= 1.
    SquareSide { mask: u32 },
    /// g_l(t) = sum_k c_{l,k} a_k cos(j_{l,k} t) with the disk boundary
    /// weights c_{l,k}; `mask` is the angular index l >= 0.
    Disk { mask: u32 },
    /// g_m(t) = sum_k c_{m,k} a_k cos(j_{m+1/2,k} t) with the ball weights.
    Ball { mask: u32 },
}

/// Evaluate one measurement row; coeffs[i] is the coefficient of radial /
/// frequency index i+1.
pub fn synth_measurements(coeffs: &[f64], model: SeriesModel, times: &[f64]) -> Vec<f64> {
    let k_modes = coeffs.len();
    if k_modes == 0 {
        return vec![0.0; times.len()];
    }
    let (lambdas, weights): (Vec<f64>, Vec<f64>) = match model {
        SeriesModel::SquareSide { mask } => (1..=k_modes)
            .map(|n| {
                let lam = PI * ((n * n + (mask as usize) * (mask as usize)) as f64).sqrt();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                (lam, sign * 2.0_f64.sqrt() * PI * n as f64)
            })
            .unzip(),
        SeriesModel::Disk { mask } => {
            let table = bessel_zeros(BesselOrder::integer(mask), k_modes)
                .expect("zero table for disk series");
            (1..=k_modes)
                .map(|k| {
                    let e = disk_eigen(mask as i32, k as u32).expect("valid disk mode");
                    (table.zero(k), e.boundary_weight)
                })
                .unzip()
        }
        SeriesModel::Ball { mask } => {
            let table = bessel_zeros(BesselOrder::half_integer(mask), k_modes)
                .expect("zero table for ball series");
            (1..=k_modes)
                .map(|k| {
                    let e = ball_eigen(mask, k as u32, 0).expect("valid ball mode");
                    (table.zero(k), e.boundary_weight)
                })
                .unzip()
        }
    };
    times
        .iter()
        .map(|&t| {
            let mut s = 0.0;
            for i in 0..k_modes {
                s += coeffs[i] * weights[i] * (lambdas[i] * t).cos();
            }
            s
        })
        .collect()
}

/// All rows l = 1..=l_max of the square-side series for a coefficient grid,
/// honoring the side orientation (Right picks column k = l, Top row n = l).
pub fn synth_square_measurements(
    grid: &CoeffGrid,
    side: Side,
    l_max: usize,
    dt: f64,
    n_steps: usize,
) -> MeasurementSet {
    let times: Vec<f64> = (0..=n_steps).map(|i| i as f64 * dt).collect();
    let j = grid.j();
    let mut g = Array2::zeros((l_max, n_steps + 1));
    for l in 1..=l_max.min(j) {
        let coeffs: Vec<f64> = match side {
            Side::Right | Side::Left => (1..=j).map(|n| grid.value(n, l)).collect(),
            Side::Top | Side::Bottom => (1..=j).map(|k| grid.value(l, k)).collect(),
        };
        let row = synth_measurements(&coeffs, SeriesModel::SquareSide { mask: l as u32 }, &times);
        g.row_mut(l - 1).assign(&ndarray::ArrayView1::from(&row));
    }
    MeasurementSet {
        surface: Surface::Square(side),
        g,
        dt,
        noise_level: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zero_coefficients_give_zero_row() {
        let times = [0.0, 0.1, 0.2];
        let row = synth_measurements(&[0.0; 5], SeriesModel::SquareSide { mask: 3 }, &times);
        assert!(row.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn single_square_mode_row() {
        // a_2 = 1, mask l = 3: row = (-1)^2 sqrt(2) pi 2 cos(lambda_{2,3} t)
        let times: Vec<f64> = (0..50).map(|i| i as f64 * 0.01).collect();
        let row = synth_measurements(
            &[0.0, 1.0],
            SeriesModel::SquareSide { mask: 3 },
            &times,
        );
        let lam = PI * 13.0_f64.sqrt();
        let amp = 2.0 * 2.0_f64.sqrt() * PI;
        assert_abs_diff_eq!(row[0], amp, epsilon = 1e-12);
        for (i, &t) in times.iter().enumerate() {
            assert_abs_diff_eq!(row[i], amp * (lam * t).cos(), epsilon = 1e-12);
        }
    }

    #[test]
    fn amplitude_value_from_weights() {
        let row = synth_measurements(&[0.0, 1.0], SeriesModel::SquareSide { mask: 3 }, &[0.0]);
        assert_abs_diff_eq!(row[0], 8.885765876316732, epsilon = 1e-12);
    }
}
