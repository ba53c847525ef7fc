//! Shepp-Logan phantom rendered into the unit square.

use super::ScalarField;

/// One phantom ellipse on the [-1, 1]^2 reference frame.
#[derive(Clone, Copy, Debug)]
pub struct Ellipse {
    pub intensity: f64,
    /// Semi-axes along the (rotated) first and second directions.
    pub a: f64,
    pub b: f64,
    pub x0: f64,
    pub y0: f64,
    /// Rotation in degrees, counterclockwise.
    pub phi_deg: f64,
}

/// Classical ten-ellipse geometry with the high-contrast intensity set,
/// which keeps the summed field inside [0, 1].
pub const SHEPP_LOGAN: [Ellipse; 10] = [
    Ellipse { intensity: 1.0, a: 0.69, b: 0.92, x0: 0.0, y0: 0.0, phi_deg: 0.0 },
    Ellipse { intensity: -0.8, a: 0.6624, b: 0.874, x0: 0.0, y0: -0.0184, phi_deg: 0.0 },
    Ellipse { intensity: -0.2, a: 0.11, b: 0.31, x0: 0.22, y0: 0.0, phi_deg: -18.0 },
    Ellipse { intensity: -0.2, a: 0.16, b: 0.41, x0: -0.22, y0: 0.0, phi_deg: 18.0 },
    Ellipse { intensity: 0.1, a: 0.21, b: 0.25, x0: 0.0, y0: 0.35, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.046, x0: 0.0, y0: 0.1, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.046, x0: 0.0, y0: -0.1, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.046, b: 0.023, x0: -0.08, y0: -0.605, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.023, b: 0.023, x0: 0.0, y0: -0.605, phi_deg: 0.0 },
    Ellipse { intensity: 0.1, a: 0.023, b: 0.046, x0: 0.06, y0: -0.605, phi_deg: 0.0 },
];

/// Render a set of ellipses onto the interior grid of [0,1]^2 via the
/// affine map u = 2 x1 - 1, v = 2 x2 - 1.
pub fn render_ellipses(ellipses: &[Ellipse], j: usize) -> ScalarField {
    let rotations: Vec<(f64, f64)> = ellipses
        .iter()
        .map(|e| {
            let r = e.phi_deg.to_radians();
            (r.cos(), r.sin())
        })
        .collect();
    ScalarField::from_fn(j, |x1, x2| {
        let u = 2.0 * x1 - 1.0;
        let v = 2.0 * x2 - 1.0;
        let mut val = 0.0;
        for (e, &(c, s)) in ellipses.iter().zip(&rotations) {
            let du = u - e.x0;
            let dv = v - e.y0;
            let xi = du * c + dv * s;
            let eta = -du * s + dv * c;
            if xi * xi / (e.a * e.a) + eta * eta / (e.b * e.b) <= 1.0 {
                val += e.intensity;
            }
        }
        val
    })
}

/// The standard Shepp-Logan phantom at J interior nodes per side; values in
/// [0, 1] and zero on the boundary ring (the outer ellipse stays inside the
/// square).
///
/// Intensity sums that cancel exactly in exact arithmetic can round a few
/// ulps below zero, so the result is clamped to [0, 1].
pub fn shepp_logan(j: usize) -> ScalarField {
    let mut f = render_ellipses(&SHEPP_LOGAN, j);
    f.values_mut().mapv_inplace(|v| v.clamp(0.0, 1.0));
    f
}
