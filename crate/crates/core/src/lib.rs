//! Photoacoustic tomography reduced to undersampled generalized Fourier measurements.
//!
//! The crate covers the full pipeline for the supported geometries (2D square,
//! 2D disk, 3D ball):
//!
//! - [`specfun`]: Bessel functions of integer and half-integer order, their
//!   positive zeros, associated Legendre functions and spherical harmonics.
//! - [`eigenbasis`]: Dirichlet-Laplacian eigenfunctions, the 2D discrete sine
//!   transform, field synthesis from coefficients and the Shepp-Logan phantom.
//! - [`wavesim`]: finite-difference forward model on the unit square with
//!   trigonometric boundary masks, plus exact series oracles and noise.
//! - [`riesz`]: nonharmonic cosine systems, Riesz lower bounds, frame-operator
//!   recovery of generalized Fourier coefficients from mask measurements.
//! - [`freespace`]: spectral free-space propagation, circular/spherical traces
//!   and the moment/sine reconstruction formulas.
//! - [`cspat`]: two-level structured sampling patterns, total-variation
//!   minimization under sine-transform constraints, tensorized reduction.

pub mod cspat;
pub mod eigenbasis;
pub mod freespace;
pub mod quad;
pub mod riesz;
pub mod specfun;
pub mod wavesim;

pub use eigenbasis::{CoeffGrid, ScalarField};
pub use wavesim::{MeasurementSet, SimConfig};
