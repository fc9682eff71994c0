use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{c_is_zero_tol, Real};

/// Scalars admitting exact (or tolerance-aware) Gaussian elimination.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero_tol(&self) -> bool;
}

impl<T: Real> Field for T {
    fn is_zero_tol(&self) -> bool {
        Real::is_zero_tol(self)
    }
}

impl<T: Real> Field for Complex<T> {
    fn is_zero_tol(&self) -> bool {
        c_is_zero_tol(self)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share a length.
    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(F::zero(), |acc, k| {
                acc + self[(r, k)].clone() * rhs[(k, c)].clone()
            })
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(
            self.cols,
            v.len(),
            "vector length differs from column count"
        );
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, c)].is_zero_tol()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = F::one() / m[(lead, c)].clone();
            for k in 0..m.cols {
                let v = m[(lead, k)].clone() * inv.clone();
                m[(lead, k)] = v;
            }
            for r in 0..m.rows {
                if r == lead || m[(r, c)].is_zero_tol() {
                    continue;
                }
                let factor = m[(r, c)].clone();
                for k in 0..m.cols {
                    let v = m[(r, k)].clone() - factor.clone() * m[(lead, k)].clone();
                    m[(r, k)] = v;
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    /// Basis of the right null space `{x : self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (red, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -red[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        Some(self.inverse()?.mul_vec(b))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Rank of a list of real vectors.
pub fn rank_of<T: Real>(vectors: &[Vec<T>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(&[vec![q(2), q(1)], vec![q(7), q(4)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Matrix::identity(2));
        let singular = Matrix::from_rows(&[vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn complex_inverse() {
        let c = |a: i64, b: i64| Complex::new(q(a), q(b));
        let m = Matrix::from_rows(&[vec![c(1, 1), c(0, 2)], vec![c(3, 0), c(1, -1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul_mat(&m), Matrix::identity(2));
    }

    #[test]
    fn rref_pivots() {
        let m = Matrix::from_rows(&[
            vec![q(0), q(1), q(2)],
            vec![q(0), q(2), q(4)],
            vec![q(1), q(0), q(1)],
        ]);
        let (_, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }
}
