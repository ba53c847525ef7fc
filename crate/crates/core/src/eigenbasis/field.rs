//! Grid fields on the unit square and coefficient grids with validity masks.

use ndarray::Array2;

/// Real samples of a function on the interior grid of the unit square:
/// values[[i1, i2]] = f(x_{i1+1}, x_{i2+1}) with x_i = i/(J+1).
#[derive(Clone, Debug)]
pub struct ScalarField {
    values: Array2<f64>,
}

impl ScalarField {
    pub fn from_values(values: Array2<f64>) -> Self {
        assert_eq!(values.nrows(), values.ncols(), "square grid expected");
        Self { values }
    }

    pub fn zeros(j: usize) -> Self {
        Self {
            values: Array2::zeros((j, j)),
        }
    }

    /// Sample a function of (x1, x2) on the interior grid.
    pub fn from_fn(j: usize, f: impl Fn(f64, f64) -> f64) -> Self {
        let h = 1.0 / (j as f64 + 1.0);
        Self {
            values: Array2::from_shape_fn((j, j), |(i1, i2)| {
                f((i1 as f64 + 1.0) * h, (i2 as f64 + 1.0) * h)
            }),
        }
    }

    /// Interior nodes per side.
    pub fn j(&self) -> usize {
        self.values.nrows()
    }

    /// Grid spacing 1/(J+1).
    pub fn h(&self) -> f64 {
        1.0 / (self.j() as f64 + 1.0)
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut Array2<f64> {
        &mut self.values
    }

    pub fn into_values(self) -> Array2<f64> {
        self.values
    }

    /// Continuum-scaled L2 norm: h * Frobenius norm (midpoint quadrature of f^2).
    pub fn norm_l2(&self) -> f64 {
        self.h() * self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Relative L2 distance to another field of the same size.
    pub fn rel_l2_error(&self, reference: &ScalarField) -> f64 {
        assert_eq!(self.j(), reference.j());
        let mut diff = 0.0;
        let mut norm = 0.0;
        for (a, b) in self.values.iter().zip(reference.values.iter()) {
            diff += (a - b) * (a - b);
            norm += b * b;
        }
        if norm == 0.0 {
            return if diff == 0.0 { 0.0 } else { f64::INFINITY };
        }
        (diff / norm).sqrt()
    }
}

/// Generalized Fourier coefficients (f, phi_{n,k}) on the square, n, k = 1..J,
/// with a validity mask marking stably recovered entries.
///
/// Invalid entries are stored as exactly zero and never read as data.
#[derive(Clone, Debug)]
pub struct CoeffGrid {
    coeffs: Array2<f64>,
    valid: Array2<bool>,
}

impl CoeffGrid {
    /// Build from raw arrays; invalid entries are forced to zero.
    pub fn new(mut coeffs: Array2<f64>, valid: Array2<bool>) -> Self {
        assert_eq!(coeffs.dim(), valid.dim());
        assert_eq!(coeffs.nrows(), coeffs.ncols());
        for (c, &v) in coeffs.iter_mut().zip(valid.iter()) {
            if !v {
                *c = 0.0;
            }
        }
        Self { coeffs, valid }
    }

    pub fn full(coeffs: Array2<f64>) -> Self {
        let dim = coeffs.dim();
        Self::new(coeffs, Array2::from_elem(dim, true))
    }

    pub fn zeros(j: usize) -> Self {
        Self {
            coeffs: Array2::zeros((j, j)),
            valid: Array2::from_elem((j, j), true),
        }
    }

    pub fn j(&self) -> usize {
        self.coeffs.nrows()
    }

    pub fn coeffs(&self) -> &Array2<f64> {
        &self.coeffs
    }

    pub fn valid(&self) -> &Array2<bool> {
        &self.valid
    }

    /// Coefficient of mode (n, k), 1-based.
    pub fn value(&self, n: usize, k: usize) -> f64 {
        self.coeffs[[n - 1, k - 1]]
    }

    pub fn is_valid(&self, n: usize, k: usize) -> bool {
        self.valid[[n - 1, k - 1]]
    }

    /// Set mode (n, k), 1-based, marking it valid.
    pub fn set_mode(&mut self, n: usize, k: usize, value: f64) {
        self.coeffs[[n - 1, k - 1]] = value;
        self.valid[[n - 1, k - 1]] = true;
    }

    pub fn invalidate(&mut self, n: usize, k: usize) {
        self.coeffs[[n - 1, k - 1]] = 0.0;
        self.valid[[n - 1, k - 1]] = false;
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|&&v| v).count()
    }

    /// Relative l2 error over all entries against a reference grid.
    pub fn rel_l2_error(&self, reference: &CoeffGrid) -> f64 {
        assert_eq!(self.j(), reference.j());
        let mut diff = 0.0;
        let mut norm = 0.0;
        for (a, b) in self.coeffs.iter().zip(reference.coeffs.iter()) {
            diff += (a - b) * (a - b);
            norm += b * b;
        }
        if norm == 0.0 {
            return if diff == 0.0 { 0.0 } else { f64::INFINITY };
        }
        (diff / norm).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_entries_are_zeroed() {
        let coeffs = Array2::from_elem((3, 3), 1.0);
        let mut valid = Array2::from_elem((3, 3), true);
        valid[[1, 2]] = false;
        let g = CoeffGrid::new(coeffs, valid);
        assert_eq!(g.value(2, 3), 0.0);
        assert!(!g.is_valid(2, 3));
        assert_eq!(g.valid_count(), 8);
    }

    #[test]
    fn field_norm_scales_with_grid() {
        // ||phi_{1,1}||_{L2} = 1; midpoint quadrature is exact on the grid
        let f = ScalarField::from_fn(31, |x1, x2| {
            2.0 * (std::f64::consts::PI * x1).sin() * (std::f64::consts::PI * x2).sin()
        });
        assert!((f.norm_l2() - 1.0).abs() < 1e-12);
    }
}
