use nalgebra::{Complex as NComplex, DMatrix, DVector as NVector};
use num_complex::Complex;

use super::matrix::Matrix;
use crate::scalar::Real;

fn to_nalgebra<T: Real>(m: &Matrix<Complex<T>>) -> DMatrix<NComplex<f64>> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| {
        NComplex::new(m[(r, c)].re.to_f64(), m[(r, c)].im.to_f64())
    })
}

/// Singular values in decreasing order (`min(rows, cols)` of them).
pub fn singular_values<T: Real>(m: &Matrix<Complex<T>>) -> Vec<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = to_nalgebra(m).singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Largest singular value; `0` for empty matrices.
pub fn spectral_norm<T: Real>(m: &Matrix<Complex<T>>) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}

/// Minimum-norm solution `x` of `m·x = y` via the pseudo-inverse.
pub fn least_norm_preimage<T: Real>(
    m: &Matrix<Complex<T>>,
    y: &[Complex<f64>],
) -> Option<Vec<Complex<f64>>> {
    let a = to_nalgebra(m);
    let pinv = a.pseudo_inverse(1e-12).ok()?;
    let yv = NVector::from_iterator(y.len(), y.iter().map(|z| NComplex::new(z.re, z.im)));
    Some(
        (pinv * yv)
            .iter()
            .map(|z| Complex::new(z.re, z.im))
            .collect(),
    )
}
