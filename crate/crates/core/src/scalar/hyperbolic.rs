use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::real::Real;
use crate::error::Error;

/// Hyperbolic number `e1·a1 + e2·a2` stored in idempotent coordinates.
///
/// The standard form `β1 + kβ2` is available through [`Hyperbolic::standard`]
/// and [`Hyperbolic::from_standard`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Hyperbolic<T> {
    pub e1: T,
    pub e2: T,
}

impl<T: Real> Hyperbolic<T> {
    pub fn new(e1: T, e2: T) -> Self {
        Self { e1, e2 }
    }

    pub fn from_real(r: T) -> Self {
        Self::new(r.clone(), r)
    }

    pub fn from_ints(a1: i64, a2: i64) -> Self {
        Self::new(T::from_i64(a1), T::from_i64(a2))
    }

    /// `e1 = (1 + k)/2`
    pub fn unit_e1() -> Self {
        Self::new(T::one(), T::zero())
    }

    /// `e2 = (1 - k)/2`
    pub fn unit_e2() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// The hyperbolic unit `k = e1 - e2`.
    pub fn unit_k() -> Self {
        Self::new(T::one(), -T::one())
    }

    /// Builds `β1 + kβ2`.
    pub fn from_standard(beta1: T, beta2: T) -> Self {
        Self::new(beta1.clone() + beta2.clone(), beta1 - beta2)
    }

    /// Returns `(β1, β2)` with `self = β1 + kβ2`.
    pub fn standard(&self) -> (T, T) {
        (
            (self.e1.clone() + self.e2.clone()).half(),
            (self.e1.clone() - self.e2.clone()).half(),
        )
    }

    pub fn component(&self, c: Idem) -> &T {
        match c {
            Idem::E1 => &self.e1,
            Idem::E2 => &self.e2,
        }
    }

    pub fn map<U: Real>(&self, f: impl Fn(&T) -> U) -> Hyperbolic<U> {
        Hyperbolic::new(f(&self.e1), f(&self.e2))
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self::new(f(&self.e1, &other.e1), f(&self.e2, &other.e2))
    }

    pub fn scale(&self, r: &T) -> Self {
        self.map(|c| c.clone() * r.clone())
    }

    /// Componentwise absolute value, which equals `|α|_k` for `α ∈ D`.
    pub fn abs(&self) -> Self {
        self.map(|c| num_traits::Signed::abs(c))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.e1.approx_eq(&other.e1) && self.e2.approx_eq(&other.e2)
    }

    pub fn is_zero_tol(&self) -> bool {
        self.e1.is_zero_tol() && self.e2.is_zero_tol()
    }

    /// Member of `D⁺`: both idempotent components nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        !self.e1.lt_tol(&T::zero()) && !self.e2.lt_tol(&T::zero())
    }

    /// `self >' 0`: both components strictly positive.
    pub fn is_positive(&self) -> bool {
        T::zero().lt_tol(&self.e1) && T::zero().lt_tol(&self.e2)
    }

    pub fn is_invertible(&self) -> bool {
        !self.e1.is_zero_tol() && !self.e2.is_zero_tol()
    }

    /// Exactly one component vanishes.
    pub fn is_zero_divisor(&self) -> bool {
        self.e1.is_zero_tol() != self.e2.is_zero_tol()
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        match (self.e1.is_zero_tol(), self.e2.is_zero_tol()) {
            (true, true) => Err(Error::ZeroDivision),
            (true, false) | (false, true) => Err(Error::NullCone),
            (false, false) => Ok(Self::new(
                T::one() / self.e1.clone(),
                T::one() / self.e2.clone(),
            )),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.clone() * rhs.inverse()?)
    }

    pub fn to_f64(&self) -> Hyperbolic<f64> {
        Hyperbolic::new(self.e1.to_f64(), self.e2.to_f64())
    }

    pub fn from_f64(h: &Hyperbolic<f64>) -> Self {
        Self::new(T::from_f64(h.e1), T::from_f64(h.e2))
    }
}

/// Selector for one of the two idempotent components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Idem {
    E1,
    E2,
}

impl Idem {
    pub const BOTH: [Idem; 2] = [Idem::E1, Idem::E2];

    pub fn index(self) -> usize {
        match self {
            Idem::E1 => 0,
            Idem::E2 => 1,
        }
    }
}

impl fmt::Display for Idem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Idem::E1 => f.write_str("e1"),
            Idem::E2 => f.write_str("e2"),
        }
    }
}

impl<T: Real> fmt::Display for Hyperbolic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e1 + {}e2", self.e1, self.e2)
    }
}

impl<T: Real> Zero for Hyperbolic<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.e1.is_zero() && self.e2.is_zero()
    }
}

impl<T: Real> One for Hyperbolic<T> {
    fn one() -> Self {
        Self::new(T::one(), T::one())
    }
}

macro_rules! componentwise_op {
    ($Op:ident, $op:ident) => {
        impl<T: Real> $Op for Hyperbolic<T> {
            type Output = Hyperbolic<T>;
            fn $op(self, rhs: Self) -> Self::Output {
                Hyperbolic::new(self.e1.$op(rhs.e1), self.e2.$op(rhs.e2))
            }
        }

        impl<'a, T: Real> $Op<&'a Hyperbolic<T>> for &'a Hyperbolic<T> {
            type Output = Hyperbolic<T>;
            fn $op(self, rhs: &'a Hyperbolic<T>) -> Self::Output {
                Hyperbolic::new(
                    self.e1.clone().$op(rhs.e1.clone()),
                    self.e2.clone().$op(rhs.e2.clone()),
                )
            }
        }
    };
}

componentwise_op!(Add, add);
componentwise_op!(Sub, sub);
componentwise_op!(Mul, mul);

impl<T: Real> Neg for Hyperbolic<T> {
    type Output = Hyperbolic<T>;
    fn neg(self) -> Self::Output {
        Hyperbolic::new(-self.e1, -self.e2)
    }
}

impl<T: Real> Neg for &Hyperbolic<T> {
    type Output = Hyperbolic<T>;
    fn neg(self) -> Self::Output {
        Hyperbolic::new(-self.e1.clone(), -self.e2.clone())
    }
}

impl<T: Real> std::iter::Sum for Hyperbolic<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<T: Real> Serialize for Hyperbolic<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::json!({ "e1": self.e1.to_json(), "e2": self.e2.to_json() }).serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for Hyperbolic<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(d)?;
        let get = |key: &str| -> Result<T, D::Error> {
            let field = v
                .get(key)
                .ok_or_else(|| D::Error::custom(format!("hyperbolic scalar missing {key:?}")))?;
            T::from_json(field).map_err(D::Error::custom)
        };
        Ok(Hyperbolic::new(get("e1")?, get("e2")?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type H = Hyperbolic<BigRational>;

    #[test]
    fn standard_round_trip() {
        let a = H::from_ints(3, -5);
        let (b1, b2) = a.standard();
        assert_eq!(H::from_standard(b1, b2), a);
        assert_eq!(
            H::from_standard(BigRational::from_i64(0), BigRational::from_i64(1)),
            H::unit_k()
        );
    }

    #[test]
    fn idempotent_identities() {
        let (e1, e2, k) = (H::unit_e1(), H::unit_e2(), H::unit_k());
        assert_eq!(&e1 * &e1, e1);
        assert_eq!(&e2 * &e2, e2);
        assert!((&e1 * &e2).is_zero());
        assert_eq!(&e1 + &e2, H::one());
        assert_eq!(&e1 - &e2, k);
        assert_eq!(&k * &k, H::one());
    }

    #[test]
    fn inverse_errors() {
        assert!(matches!(H::unit_e1().inverse(), Err(Error::NullCone)));
        assert!(matches!(H::zero().inverse(), Err(Error::ZeroDivision)));
        let a = H::from_ints(2, 4);
        assert_eq!(
            a.inverse().unwrap(),
            H::new(BigRational::from_ratio(1, 2), BigRational::from_ratio(1, 4))
        );
    }

    #[test]
    fn json_shape() {
        let a = H::new(BigRational::from_ratio(1, 2), BigRational::from_i64(-3));
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v, serde_json::json!({"e1": "1/2", "e2": "-3"}));
        let back: H = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
    }
}
