//! Mask-weighted boundary measurements.

use super::solver::BoundaryTraces;
use super::{MeasurementSet, Side, SimError, Surface};
use ndarray::Array2;
use std::f64::consts::PI;

/// G[l-1][i] = midpoint-quadrature inner product of the normal-derivative
/// trace at t_i against the mask sqrt(2) sin(l pi s), l = 1..=l_max.
pub fn measure(
    traces: &BoundaryTraces,
    side: Side,
    l_max: usize,
) -> Result<MeasurementSet, SimError> {
    let j = traces.cfg.j_grid;
    if l_max > j {
        return Err(SimError::MaskAliasing { l_max, j_grid: j });
    }
    let h = traces.cfg.h();
    // masks as an (L x J) matrix including the quadrature weight h
    let masks = Array2::from_shape_fn((l_max, j), |(l, i)| {
        let x = (i as f64 + 1.0) * h;
        2.0_f64.sqrt() * ((l as f64 + 1.0) * PI * x).sin() * h
    });
    // (L x J) . (J x N+1)
    let g = masks.dot(&traces.side(side).t());
    Ok(MeasurementSet {
        surface: Surface::Square(side),
        g,
        dt: traces.cfg.dt,
        noise_level: 0.0,
    })
}
