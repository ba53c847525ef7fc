//! Bounded-domain forward model on the unit square: leapfrog finite
//! differences for the Dirichlet wave equation, one-sided normal-derivative
//! extraction, mask-weighted measurements, calibrated Gaussian noise, and
//! exact cosine-series oracles for the square side, disk and ball.

mod measure;
mod noise;
mod series;
mod solver;

pub use measure::measure;
pub use noise::{add_noise, noise_ratio};
pub use series::{synth_measurements, synth_square_measurements, SeriesModel};
pub use solver::{simulate, BoundaryTraces, WaveStepper};

use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("CFL violated: dt = {dt} exceeds the stability bound h/sqrt(2) = {bound}")]
    CflViolated { dt: f64, bound: f64 },
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error("initial field has {got} nodes per side, config expects {expected}")]
    GridMismatch { got: usize, expected: usize },
    #[error("mask count {l_max} exceeds the grid resolution {j_grid} (aliasing)")]
    MaskAliasing { l_max: usize, j_grid: usize },
}

/// Finite-difference configuration; sound speed is 1 and the domain the
/// unit square with J_grid interior nodes per side (h = 1/(J_grid+1)).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimConfig {
    pub j_grid: usize,
    pub dt: f64,
    pub t_final: f64,
}

impl SimConfig {
    /// Default desk-scale rule dt = h/2.
    pub fn with_dt_rule(j_grid: usize, t_final: f64) -> Self {
        let h = 1.0 / (j_grid as f64 + 1.0);
        Self {
            j_grid,
            dt: h / 2.0,
            t_final,
        }
    }

    pub fn h(&self) -> f64 {
        1.0 / (self.j_grid as f64 + 1.0)
    }

    /// Stability bound dt <= h/sqrt(2).
    pub fn cfl_bound(&self) -> f64 {
        self.h() / 2.0_f64.sqrt()
    }

    /// Number of time steps N = ceil(T/dt); samples run t_0..t_N.
    pub fn n_steps(&self) -> usize {
        (self.t_final / self.dt).ceil() as usize
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if self.j_grid == 0 || !self.dt.is_finite() || self.dt <= 0.0 || self.t_final <= 0.0 {
            return Err(SimError::InvalidConfig(format!(
                "j_grid = {}, dt = {}, t_final = {}",
                self.j_grid, self.dt, self.t_final
            )));
        }
        let bound = self.cfl_bound();
        if self.dt > bound * (1.0 + 1e-12) {
            return Err(SimError::CflViolated { dt: self.dt, bound });
        }
        Ok(())
    }
}

/// Side of the unit square, named from the coordinate layout
/// (x1, x2) in [0,1]^2: Right = {x1 = 1}, Top = {x2 = 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Bottom, Side::Top];

    pub fn index(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
            Side::Bottom => 2,
            Side::Top => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Bottom => "bottom",
            Side::Top => "top",
        }
    }
}

/// Acquisition surface a measurement row set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Square(Side),
    DiskBoundary,
    BallBoundary,
}

/// Sensor readings G[l-1][i] = g_l(t_i) for one acquisition surface, on the
/// uniform time grid t_i = i dt, i = 0..=n_steps.
#[derive(Clone, Debug)]
pub struct MeasurementSet {
    pub surface: Surface,
    /// L_max x (N+1).
    pub g: Array2<f64>,
    pub dt: f64,
    /// Realized relative noise level per the max-ratio definition.
    pub noise_level: f64,
}

impl MeasurementSet {
    pub fn l_max(&self) -> usize {
        self.g.nrows()
    }

    pub fn n_samples(&self) -> usize {
        self.g.ncols()
    }

    pub fn t_final(&self) -> f64 {
        (self.n_samples() - 1) as f64 * self.dt
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.n_samples()).map(|i| i as f64 * self.dt).collect()
    }
}
