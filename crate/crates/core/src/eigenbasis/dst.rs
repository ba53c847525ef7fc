//! 2D discrete sine transform (DST-I) with the 2/(J+1) normalization.
//!
//! Realized through a zero-padded FFT of length 2(J+1) whose imaginary part
//! carries the sine sums; with this normalization the transform is
//! orthogonal and symmetric, hence its own inverse.

use super::EigenError;
use ndarray::Array2;
use num_complex::Complex64;
use once_cell::sync::Lazy;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

static PLANS: Lazy<Mutex<HashMap<usize, Arc<dyn Fft<f64>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn plan(len: usize) -> Arc<dyn Fft<f64>> {
    let mut plans = PLANS.lock().unwrap();
    plans
        .entry(len)
        .or_insert_with(|| FftPlanner::new().plan_fft_forward(len))
        .clone()
}

/// F_hat[n,k] = 2/(J+1) sum_{n',k'} F[n',k'] sin(pi n n'/(J+1)) sin(pi k k'/(J+1)),
/// indices 1-based in the formula, 0-based in the arrays.
pub fn dst2(f: &Array2<f64>) -> Result<Array2<f64>, EigenError> {
    let (rows, cols) = f.dim();
    if rows != cols {
        return Err(EigenError::NonSquare { rows, cols });
    }
    let mut a = dst_rows(f);
    a = dst_rows(&a.reversed_axes().as_standard_layout().to_owned());
    Ok(a.reversed_axes().as_standard_layout().to_owned())
}

/// Apply the 1D normalized DST-I to every row. Rows are processed in pairs
/// packed into one complex FFT (real/imaginary two-for-one).
fn dst_rows(f: &Array2<f64>) -> Array2<f64> {
    let (rows, j) = f.dim();
    let n = 2 * (j + 1);
    let fft = plan(n);
    let scale = 1.0 / (j as f64 + 1.0);
    let mut out = Array2::zeros((rows, j));
    let mut buf = vec![Complex64::default(); n];
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    let mut r = 0;
    while r < rows {
        let pair = r + 1 < rows;
        {
            let ra = f.row(r);
            for v in buf.iter_mut() {
                *v = Complex64::default();
            }
            if pair {
                let rb = f.row(r + 1);
                for i in 0..j {
                    buf[i + 1] = Complex64::new(ra[i], rb[i]);
                    buf[n - 1 - i] = Complex64::new(-ra[i], -rb[i]);
                }
            } else {
                for i in 0..j {
                    buf[i + 1] = Complex64::new(ra[i], 0.0);
                    buf[n - 1 - i] = Complex64::new(-ra[i], 0.0);
                }
            }
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        if pair {
            let (mut oa, mut ob) = out.multi_slice_mut((ndarray::s![r, ..], ndarray::s![r + 1, ..]));
            for k in 1..=j {
                let z = buf[k];
                let zc = buf[n - k];
                // packed transforms: A = (Z + conj(Z~))/2, B = (Z - conj(Z~))/(2i)
                oa[k - 1] = -(z.im - zc.im) * 0.5 * scale;
                ob[k - 1] = (z.re - zc.re) * 0.5 * scale;
            }
            r += 2;
        } else {
            let mut oa = out.row_mut(r);
            for k in 1..=j {
                oa[k - 1] = -buf[k].im * scale;
            }
            r += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::Array2;
    use std::f64::consts::PI;

    /// Quadruple-loop definition, the independent reference.
    fn dst2_direct(f: &Array2<f64>) -> Array2<f64> {
        let j = f.nrows();
        let mut out = Array2::zeros((j, j));
        let jp = j as f64 + 1.0;
        for n in 1..=j {
            for k in 1..=j {
                let mut s = 0.0;
                for np in 1..=j {
                    for kp in 1..=j {
                        s += f[[np - 1, kp - 1]]
                            * (PI * n as f64 * np as f64 / jp).sin()
                            * (PI * k as f64 * kp as f64 / jp).sin();
                    }
                }
                out[[n - 1, k - 1]] = 2.0 / jp * s;
            }
        }
        out
    }

    #[test]
    fn matches_direct_sum_8x8() {
        let mut rng = 1234u64;
        let mut next = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let f = Array2::from_shape_fn((8, 8), |_| next());
        let fast = dst2(&f).unwrap();
        let slow = dst2_direct(&f);
        for (a, b) in fast.iter().zip(slow.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn delta_input_gives_product_of_sines() {
        let j = 7;
        let mut f = Array2::zeros((j, j));
        f[[0, 0]] = 1.0; // delta at (n', k') = (1, 1)
        let out = dst2(&f).unwrap();
        let jp = j as f64 + 1.0;
        for n in 1..=j {
            for k in 1..=j {
                let expect = 2.0 / jp * (PI * n as f64 / jp).sin() * (PI * k as f64 / jp).sin();
                assert_abs_diff_eq!(out[[n - 1, k - 1]], expect, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn involution_and_norm_preservation() {
        let f = Array2::from_shape_fn((33, 33), |(i, j)| ((i * 7 + j * 13) % 11) as f64 - 5.0);
        let once = dst2(&f).unwrap();
        let twice = dst2(&once).unwrap();
        let mut max_err: f64 = 0.0;
        for (a, b) in twice.iter().zip(f.iter()) {
            max_err = max_err.max((a - b).abs());
        }
        assert!(max_err < 1e-12, "involution error {max_err}");
        let n0: f64 = f.iter().map(|v| v * v).sum::<f64>().sqrt();
        let n1: f64 = once.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert_abs_diff_eq!(n0, n1, epsilon = 1e-10 * n0);
    }

    #[test]
    fn non_square_rejected() {
        let f = Array2::zeros((3, 4));
        assert!(matches!(dst2(&f), Err(EigenError::NonSquare { .. })));
    }
}
