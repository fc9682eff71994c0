use std::ops::{Add, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Bicomplex, Hyperbolic, Idem, Real};

/// Element of the coordinate module `D^n`, split as `e1·x1 + e2·x2` with
/// real vectors `x1, x2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct DVector<T>(pub Vec<Hyperbolic<T>>);

/// Element of `BC^n`, split as `e1·x1 + e2·x2` with complex vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct BCVector<T>(pub Vec<Bicomplex<T>>);

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn real_dot<T: Real>(a: &[T], b: &[T]) -> T {
    T::dot(a, b)
}

impl<T: Real> DVector<T> {
    pub fn new(coords: Vec<Hyperbolic<T>>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Hyperbolic::zero(); n])
    }

    /// The `k`-th standard basis vector of `D^n`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = Hyperbolic::from_real(T::one());
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Hyperbolic<T>] {
        &self.0
    }

    /// Assembles `e1·x1 + e2·x2` from two real vectors of equal length.
    pub fn from_components(x1: &[T], x2: &[T]) -> Result<Self> {
        check_dim(x1.len(), x2.len())?;
        Ok(Self(
            x1.iter()
                .zip(x2)
                .map(|(a, b)| Hyperbolic::new(a.clone(), b.clone()))
                .collect(),
        ))
    }

    pub fn component(&self, c: Idem) -> Vec<T> {
        self.0.iter().map(|h| h.component(c).clone()).collect()
    }

    pub fn components(&self) -> (Vec<T>, Vec<T>) {
        (self.component(Idem::E1), self.component(Idem::E2))
    }

    /// Multiplication by a hyperbolic scalar.
    pub fn scale(&self, alpha: &Hyperbolic<T>) -> Self {
        Self(self.0.iter().map(|x| alpha * x).collect())
    }

    pub fn is_zero_tol(&self) -> bool {
        self.0.iter().all(Hyperbolic::is_zero_tol)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b))
    }

    /// Embeds `D^n` into `BC^n`.
    pub fn to_bicomplex(&self) -> BCVector<T> {
        BCVector(self.0.iter().map(Bicomplex::from_hyperbolic).collect())
    }

    pub fn to_f64(&self) -> DVector<f64> {
        DVector(self.0.iter().map(Hyperbolic::to_f64).collect())
    }
}

impl<T: Real> Add for &DVector<T> {
    type Output = DVector<T>;
    fn add(self, rhs: Self) -> DVector<T> {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in vector sum");
        DVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<T: Real> Sub for &DVector<T> {
    type Output = DVector<T>;
    fn sub(self, rhs: Self) -> DVector<T> {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "dimension mismatch in vector difference"
        );
        DVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl<T: Real> Neg for &DVector<T> {
    type Output = DVector<T>;
    fn neg(self) -> DVector<T> {
        DVector(self.0.iter().map(|a| -a).collect())
    }
}

impl<T: Real> BCVector<T> {
    pub fn new(coords: Vec<Bicomplex<T>>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Bicomplex::zero(); n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = Bicomplex::from_real(T::one());
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Bicomplex<T>] {
        &self.0
    }

    pub fn from_components(x1: &[Complex<T>], x2: &[Complex<T>]) -> Result<Self> {
        check_dim(x1.len(), x2.len())?;
        Ok(Self(
            x1.iter()
                .zip(x2)
                .map(|(a, b)| Bicomplex::new(a.clone(), b.clone()))
                .collect(),
        ))
    }

    pub fn component(&self, c: Idem) -> Vec<Complex<T>> {
        self.0
            .iter()
            .map(|z| match c {
                Idem::E1 => z.z1.clone(),
                Idem::E2 => z.z2.clone(),
            })
            .collect()
    }

    pub fn components(&self) -> (Vec<Complex<T>>, Vec<Complex<T>>) {
        (self.component(Idem::E1), self.component(Idem::E2))
    }

    pub fn scale(&self, lambda: &Bicomplex<T>) -> Self {
        Self(self.0.iter().map(|x| lambda * x).collect())
    }

    /// Views `BC^n` as the `D`-module `D^{2n}`: writing each coordinate as
    /// `u + i·v` with `u, v ∈ D`, the result is `[u_1..u_n, v_1..v_n]`.
    pub fn realify(&self) -> DVector<T> {
        let mut coords: Vec<_> = self.0.iter().map(Bicomplex::hyperbolic_part).collect();
        coords.extend(self.0.iter().map(Bicomplex::imag_part));
        DVector(coords)
    }

    /// Inverse of [`Self::realify`]; the input dimension must be even.
    pub fn from_realified(v: &DVector<T>) -> Result<Self> {
        if !v.dim().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                expected: v.dim() + 1,
                found: v.dim(),
            });
        }
        let n = v.dim() / 2;
        Ok(Self(
            (0..n)
                .map(|m| Bicomplex::from_parts(&v.0[m], &v.0[n + m]))
                .collect(),
        ))
    }

    /// Squared `D`-valued Euclidean norm `e1‖x1‖² + e2‖x2‖²`.
    pub fn dnorm_sq(&self) -> Hyperbolic<T> {
        self.0.iter().map(Bicomplex::norm_k_sq).sum()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b))
    }

    pub fn to_f64(&self) -> BCVector<f64> {
        BCVector(self.0.iter().map(Bicomplex::to_f64).collect())
    }
}

impl<T: Real> Add for &BCVector<T> {
    type Output = BCVector<T>;
    fn add(self, rhs: Self) -> BCVector<T> {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in vector sum");
        BCVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<T: Real> Sub for &BCVector<T> {
    type Output = BCVector<T>;
    fn sub(self, rhs: Self) -> BCVector<T> {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "dimension mismatch in vector difference"
        );
        BCVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn split_round_trip() {
        let x = DVector::from_components(&[q(1), q(2)], &[q(3), q(4)]).unwrap();
        let (a, b) = x.components();
        assert_eq!(DVector::from_components(&a, &b).unwrap(), x);
        assert!(DVector::from_components(&[q(1)], &[q(1), q(2)]).is_err());
    }

    #[test]
    fn realify_round_trip() {
        let z = Bicomplex::from_real_basis([q(1), q(2), q(3), q(4)]);
        let x = BCVector(vec![z.clone(), Bicomplex::unit_j()]);
        let r = x.realify();
        assert_eq!(r.dim(), 4);
        assert_eq!(r.0[0], Hyperbolic::from_standard(q(1), q(4)));
        assert_eq!(BCVector::from_realified(&r).unwrap(), x);
    }
}
