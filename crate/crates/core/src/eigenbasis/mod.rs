//! Dirichlet-Laplacian eigenbases for the unit square, unit disk and unit
//! ball, the 2D discrete sine transform, coefficient-grid synthesis and the
//! Shepp-Logan phantom.
//!
//! Grid convention for the square: interior nodes x_i = i/(J+1), i = 1..J, so
//! DST indices align exactly with eigenfunction frequencies.

mod dst;
mod field;
mod modes;
mod phantom;

pub use dst::dst2;
pub use field::{CoeffGrid, ScalarField};
pub use modes::{ball_eigen, disk_eigen, square_eigen, BallEigen, DiskEigen, SquareEigen};
pub use phantom::{render_ellipses, shepp_logan, Ellipse, SHEPP_LOGAN};

use ndarray::Array2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EigenError {
    #[error("dst2 requires a square array, got {rows} x {cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("eigenfunction indices must satisfy the domain bounds: {0}")]
    InvalidIndex(String),
    #[error("synthesis resolution {res} is below the coefficient order {j}")]
    ResolutionTooSmall { res: usize, j: usize },
}

/// Partial sum of valid coefficients against the square eigenfunctions,
/// sampled on the interior grid of the requested resolution.
///
/// On the aligned grid this equals (res+1) times the inverse (= forward)
/// DST of the zero-padded coefficient array, which is how it is computed.
pub fn synthesize(grid: &CoeffGrid, resolution: usize) -> Result<ScalarField, EigenError> {
    let j = grid.j();
    if resolution < j {
        return Err(EigenError::ResolutionTooSmall { res: resolution, j });
    }
    let mut padded = Array2::zeros((resolution, resolution));
    padded
        .slice_mut(ndarray::s![..j, ..j])
        .assign(grid.coeffs());
    let mut out = dst2(&padded)?;
    out.mapv_inplace(|v| v * (resolution as f64 + 1.0));
    Ok(ScalarField::from_values(out))
}

/// Generalized Fourier coefficients of a sampled field: the midpoint-grid
/// analysis dual of [`synthesize`], i.e. dst2(values)/(J+1).
pub fn analyze(field: &ScalarField) -> CoeffGrid {
    let j = field.j();
    let mut c = dst2(field.values()).expect("field arrays are square");
    c.mapv_inplace(|v| v / (j as f64 + 1.0));
    CoeffGrid::full(c)
}
