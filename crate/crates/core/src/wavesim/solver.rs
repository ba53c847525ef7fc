//! Leapfrog stepper and boundary trace collection.

use super::{Side, SimConfig, SimError};
use crate::eigenbasis::ScalarField;
use ndarray::Array2;

/// Second-order leapfrog in time, 5-point Laplacian in space, homogeneous
/// Dirichlet data on the boundary of the unit square.
///
/// The first step is the symmetric Taylor start
/// p^1 = p^0 + (dt^2/2) L p^0, which encodes zero initial velocity with the
/// same time symmetry as the continuum problem; for sampled eigenfunctions
/// the scheme then reproduces the exact discrete standing wave.
pub struct WaveStepper {
    cfg: SimConfig,
    prev: Array2<f64>,
    curr: Array2<f64>,
    scratch: Array2<f64>,
    step: usize,
}

impl WaveStepper {
    pub fn new(f0: &ScalarField, cfg: SimConfig) -> Result<Self, SimError> {
        cfg.validate()?;
        if f0.j() != cfg.j_grid {
            return Err(SimError::GridMismatch {
                got: f0.j(),
                expected: cfg.j_grid,
            });
        }
        Ok(Self {
            cfg,
            prev: f0.values().clone(),
            curr: f0.values().clone(),
            scratch: Array2::zeros((cfg.j_grid, cfg.j_grid)),
            step: 0,
        })
    }

    pub fn config(&self) -> SimConfig {
        self.cfg
    }

    pub fn step_index(&self) -> usize {
        self.step
    }

    pub fn time(&self) -> f64 {
        self.step as f64 * self.cfg.dt
    }

    /// Pressure at the current step.
    pub fn pressure(&self) -> &Array2<f64> {
        &self.curr
    }

    /// One leapfrog step.
    pub fn advance(&mut self) {
        let j = self.cfg.j_grid;
        let r2 = (self.cfg.dt / self.cfg.h()).powi(2);
        let src = self.curr.as_slice().expect("standard layout");
        let lap = self.scratch.as_slice_mut().expect("standard layout");
        laplacian_dirichlet(src, lap, j);
        let prev = self.prev.as_slice_mut().expect("standard layout");
        if self.step == 0 {
            // p^1 = p^0 + (dt^2/2) L p^0; prev currently equals p^0
            for i in 0..j * j {
                prev[i] = src[i] + 0.5 * r2 * lap[i];
            }
        } else {
            // p^{m+1} = 2 p^m - p^{m-1} + dt^2 L p^m, written into prev
            for i in 0..j * j {
                prev[i] = 2.0 * src[i] - prev[i] + r2 * lap[i];
            }
        }
        std::mem::swap(&mut self.prev, &mut self.curr);
        self.step += 1;
    }

    /// Discrete leapfrog energy of the (prev, curr) pair; conserved by
    /// `advance` up to roundoff. Meaningful once step >= 1.
    pub fn energy(&self) -> f64 {
        let j = self.cfg.j_grid;
        let h = self.cfg.h();
        let dt = self.cfg.dt;
        let prev = self.prev.as_slice().expect("standard layout");
        let curr = self.curr.as_slice().expect("standard layout");
        let mut lap = vec![0.0; j * j];
        laplacian_dirichlet(prev, &mut lap, j);
        let mut kinetic = 0.0;
        let mut potential = 0.0;
        for i in 0..j * j {
            let d = curr[i] - prev[i];
            kinetic += d * d;
            potential += curr[i] * lap[i];
        }
        h * h * (0.5 * kinetic / (dt * dt) - 0.5 * potential / (h * h))
    }

    /// One-sided 3-point second-order outward normal derivative along a side,
    /// using the homogeneous boundary value.
    pub fn normal_derivative(&self, side: Side) -> Vec<f64> {
        let j = self.cfg.j_grid;
        let inv2h = 0.5 / self.cfg.h();
        let v = &self.curr;
        let mut out = vec![0.0; j];
        match side {
            Side::Right => {
                for k in 0..j {
                    out[k] = (v[[j - 2, k]] - 4.0 * v[[j - 1, k]]) * inv2h;
                }
            }
            Side::Left => {
                for k in 0..j {
                    out[k] = (v[[1, k]] - 4.0 * v[[0, k]]) * inv2h;
                }
            }
            Side::Top => {
                for i in 0..j {
                    out[i] = (v[[i, j - 2]] - 4.0 * v[[i, j - 1]]) * inv2h;
                }
            }
            Side::Bottom => {
                for i in 0..j {
                    out[i] = (v[[i, 1]] - 4.0 * v[[i, 0]]) * inv2h;
                }
            }
        }
        out
    }
}

/// 5-point Laplacian (undivided by h^2) with zero Dirichlet halo.
fn laplacian_dirichlet(src: &[f64], dst: &mut [f64], j: usize) {
    debug_assert_eq!(src.len(), j * j);
    if j == 1 {
        dst[0] = -4.0 * src[0];
        return;
    }
    for i in 0..j {
        let base = i * j;
        let row = &src[base..base + j];
        let up = if i > 0 { &src[base - j..base] } else { &[] };
        let down = if i + 1 < j {
            &src[base + j..base + 2 * j]
        } else {
            &[]
        };
        let vert = |k: usize| -> f64 {
            let u = if up.is_empty() { 0.0 } else { up[k] };
            let d = if down.is_empty() { 0.0 } else { down[k] };
            u + d
        };
        dst[base] = vert(0) + row[1] - 4.0 * row[0];
        if up.is_empty() || down.is_empty() {
            for k in 1..j - 1 {
                dst[base + k] = vert(k) + row[k - 1] + row[k + 1] - 4.0 * row[k];
            }
        } else {
            // interior rows: branch-free inner loop
            for k in 1..j - 1 {
                dst[base + k] = up[k] + down[k] + row[k - 1] + row[k + 1] - 4.0 * row[k];
            }
        }
        dst[base + j - 1] = vert(j - 1) + row[j - 2] - 4.0 * row[j - 1];
    }
}

/// Normal-derivative samples on all four sides for every time step
/// t_0 .. t_N; sides[s] has shape (N+1, J).
#[derive(Clone, Debug)]
pub struct BoundaryTraces {
    pub cfg: SimConfig,
    pub sides: [Array2<f64>; 4],
}

impl BoundaryTraces {
    pub fn side(&self, side: Side) -> &Array2<f64> {
        &self.sides[side.index()]
    }

    pub fn n_samples(&self) -> usize {
        self.sides[0].nrows()
    }
}

/// Run the stepper to T and collect normal-derivative traces on all sides.
pub fn simulate(f0: &ScalarField, cfg: SimConfig) -> Result<BoundaryTraces, SimError> {
    let mut stepper = WaveStepper::new(f0, cfg)?;
    let n = cfg.n_steps();
    let j = cfg.j_grid;
    let mut sides = [
        Array2::zeros((n + 1, j)),
        Array2::zeros((n + 1, j)),
        Array2::zeros((n + 1, j)),
        Array2::zeros((n + 1, j)),
    ];
    for i in 0..=n {
        for side in Side::ALL {
            let row = stepper.normal_derivative(side);
            sides[side.index()]
                .row_mut(i)
                .assign(&ndarray::ArrayView1::from(&row));
        }
        if i < n {
            stepper.advance();
        }
    }
    Ok(BoundaryTraces { cfg, sides })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenbasis::square_eigen;

    #[test]
    fn zero_initial_data_gives_zero_traces() {
        let cfg = SimConfig::with_dt_rule(31, 0.5);
        let traces = simulate(&ScalarField::zeros(31), cfg).unwrap();
        for side in Side::ALL {
            assert!(traces.side(side).iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn standing_wave_tracks_analytic_solution() {
        let j = 63;
        let cfg = SimConfig::with_dt_rule(j, 0.5);
        let mode = square_eigen(1, 1).unwrap();
        let mut stepper = WaveStepper::new(&mode.sample(j), cfg).unwrap();
        let n = cfg.n_steps();
        for _ in 0..n {
            stepper.advance();
        }
        let t = stepper.time();
        let expect = mode.sample(j);
        let mut max_err: f64 = 0.0;
        for (p, e) in stepper.pressure().iter().zip(expect.values().iter()) {
            max_err = max_err.max((p - (mode.lambda * t).cos() * e).abs());
        }
        assert!(max_err < 2e-3, "max error {max_err}");
    }

    #[test]
    fn leapfrog_energy_is_conserved() {
        let j = 63;
        // strict CFL: dt right at the bound
        let cfg = SimConfig {
            j_grid: j,
            dt: (1.0 / 64.0) / 2.0_f64.sqrt(),
            t_final: 1.0,
        };
        let mode = square_eigen(3, 5).unwrap();
        let mut stepper = WaveStepper::new(&mode.sample(j), cfg).unwrap();
        stepper.advance();
        let e0 = stepper.energy();
        let mut max_drift: f64 = 0.0;
        for _ in 1..cfg.n_steps() {
            stepper.advance();
            max_drift = max_drift.max((stepper.energy() - e0).abs() / e0);
        }
        assert!(max_drift < 1e-10, "relative drift {max_drift}");
    }

    #[test]
    fn grid_mismatch_rejected() {
        let cfg = SimConfig::with_dt_rule(31, 0.5);
        assert!(matches!(
            WaveStepper::new(&ScalarField::zeros(15), cfg),
            Err(SimError::GridMismatch { .. })
        ));
    }
}
