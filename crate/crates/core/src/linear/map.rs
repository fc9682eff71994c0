use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::Matrix;
use super::spectral::spectral_norm;
use super::vector::{check_dim, BCVector};
use crate::error::{Error, Result};
use crate::scalar::{Bicomplex, Hyperbolic, Idem, Real};

/// `BC`-linear map `BC^cols → BC^rows`, stored as a matrix of bicomplex
/// entries. It splits as `e1·T1 + e2·T2` with complex matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BCLinearMap<T> {
    rows: Vec<Vec<Bicomplex<T>>>,
    cols: usize,
}

impl<T: Real> BCLinearMap<T> {
    pub fn from_rows(rows: Vec<Vec<Bicomplex<T>>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            check_dim(cols, r.len())?;
        }
        Ok(Self { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Bicomplex::from_real(T::one())
            } else {
                Bicomplex::from_real(T::zero())
            }
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Bicomplex::from_real(T::zero()))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Bicomplex<T>) -> Self {
        Self {
            rows: (0..rows)
                .map(|r| (0..cols).map(|c| f(r, c)).collect())
                .collect(),
            cols,
        }
    }

    /// Diagonal map with the given entries.
    pub fn diagonal(entries: &[Bicomplex<T>]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                Bicomplex::from_real(T::zero())
            }
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Bicomplex<T> {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<Bicomplex<T>>] {
        &self.rows
    }

    pub fn apply(&self, x: &BCVector<T>) -> Result<BCVector<T>> {
        check_dim(self.cols, x.dim())?;
        Ok(BCVector(
            self.rows
                .iter()
                .map(|row| row.iter().zip(&x.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// Complex component matrix `T1` or `T2`.
    pub fn component(&self, c: Idem) -> Matrix<Complex<T>> {
        Matrix::from_fn(self.nrows(), self.cols, |r, k| match c {
            Idem::E1 => self.rows[r][k].z1.clone(),
            Idem::E2 => self.rows[r][k].z2.clone(),
        })
    }

    /// Reassembles `e1·T1 + e2·T2`.
    pub fn from_components(t1: &Matrix<Complex<T>>, t2: &Matrix<Complex<T>>) -> Result<Self> {
        check_dim(t1.rows(), t2.rows())?;
        check_dim(t1.cols(), t2.cols())?;
        Ok(Self::from_fn(t1.rows(), t1.cols(), |r, c| {
            Bicomplex::new(t1[(r, c)].clone(), t2[(r, c)].clone())
        }))
    }

    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.cols, rhs.nrows())?;
        Ok(Self::from_fn(self.nrows(), rhs.cols, |r, c| {
            (0..self.cols)
                .map(|k| &self.rows[r][k] * &rhs.rows[k][c])
                .sum()
        }))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.nrows() == other.nrows()
            && self.cols == other.cols
            && self
                .rows
                .iter()
                .flatten()
                .zip(other.rows.iter().flatten())
                .all(|(a, b)| a.approx_eq(b))
    }

    pub fn to_f64(&self) -> BCLinearMap<f64> {
        BCLinearMap {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(Bicomplex::to_f64).collect())
                .collect(),
            cols: self.cols,
        }
    }
}

/// `e1‖T1‖ + e2‖T2‖` with spectral norms of the complex components.
///
/// Computed in floating point: singular values are irrational in general.
pub fn operator_dnorm<T: Real>(t: &BCLinearMap<T>) -> Hyperbolic<f64> {
    Hyperbolic::new(
        spectral_norm(&t.component(Idem::E1)),
        spectral_norm(&t.component(Idem::E2)),
    )
}

impl<T: Real> Serialize for BCLinearMap<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(bound(serialize = "T: Real"))]
        struct Repr<'a, T> {
            rows: &'a Vec<Vec<Bicomplex<T>>>,
        }
        Repr { rows: &self.rows }.serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for BCLinearMap<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(bound(deserialize = "T: Real"))]
        struct Repr<T> {
            rows: Vec<Vec<Bicomplex<T>>>,
        }
        let r = Repr::<T>::deserialize(d)?;
        BCLinearMap::from_rows(r.rows).map_err(|e: Error| serde::de::Error::custom(e.to_string()))
    }
}
