use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::hyperbolic::Hyperbolic;
use super::real::Real;
use crate::error::Error;

/// Complex numbers over the imaginary unit `i`.
pub type ComplexScalar<T> = Complex<T>;

/// Bicomplex number `e1·z1 + e2·z2` stored in idempotent coordinates.
///
/// Multiplication, inversion and the `k`-modulus are all componentwise in
/// this representation. The `w1 + j·w2` form is a conversion view.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex<T> {
    pub z1: Complex<T>,
    pub z2: Complex<T>,
}

/// The three conjugations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    /// `w1 + j w2 ↦ conj(w1) + j conj(w2)`
    Dagger1,
    /// `w1 + j w2 ↦ w1 - j w2`
    Dagger2,
    /// `w1 + j w2 ↦ conj(w1) - j conj(w2)`
    Dagger3,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [
        Conjugation::Dagger1,
        Conjugation::Dagger2,
        Conjugation::Dagger3,
    ];
}

/// Which of the three squared moduli `Z·Z^†` to form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModulusKind {
    I,
    J,
    K,
}

pub(crate) fn cplx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

fn c_i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

fn c_conj<T: Real>(z: &Complex<T>) -> Complex<T> {
    Complex::new(z.re.clone(), -z.im.clone())
}

pub(crate) fn c_approx_eq<T: Real>(a: &Complex<T>, b: &Complex<T>) -> bool {
    a.re.approx_eq(&b.re) && a.im.approx_eq(&b.im)
}

pub(crate) fn c_is_zero_tol<T: Real>(a: &Complex<T>) -> bool {
    a.re.is_zero_tol() && a.im.is_zero_tol()
}

impl<T: Real> Bicomplex<T> {
    pub fn new(z1: Complex<T>, z2: Complex<T>) -> Self {
        Self { z1, z2 }
    }

    pub fn from_real(r: T) -> Self {
        Self::new(cplx(r.clone(), T::zero()), cplx(r, T::zero()))
    }

    /// Embeds a complex number of `C(i)` as `e1·z + e2·z`.
    pub fn from_complex(z: Complex<T>) -> Self {
        Self::new(z.clone(), z)
    }

    pub fn from_hyperbolic(h: &Hyperbolic<T>) -> Self {
        Self::new(cplx(h.e1.clone(), T::zero()), cplx(h.e2.clone(), T::zero()))
    }

    /// Converts from `Z = w1 + j·w2`: `z1 = w1 - i·w2`, `z2 = w1 + i·w2`.
    pub fn from_w(w1: Complex<T>, w2: Complex<T>) -> Self {
        let iw2 = c_i::<T>() * w2;
        Self::new(w1.clone() - iw2.clone(), w1 + iw2)
    }

    /// Returns `(w1, w2)` with `w1 = (z1+z2)/2`, `w2 = i(z1-z2)/2`.
    pub fn w(&self) -> (Complex<T>, Complex<T>) {
        let two = T::from_i64(2);
        let w1 = (self.z1.clone() + self.z2.clone()) / two.clone();
        let w2 = c_i::<T>() * (self.z1.clone() - self.z2.clone()) / two;
        (w1, w2)
    }

    /// Builds `g1 + i·g2 + j·g3 + k·g4`.
    pub fn from_real_basis(g: [T; 4]) -> Self {
        let [g1, g2, g3, g4] = g;
        Self::from_w(cplx(g1, g2), cplx(g3, g4))
    }

    /// Coefficients `[g1, g2, g3, g4]` on the real basis `1, i, j, k`.
    pub fn real_basis(&self) -> [T; 4] {
        let (w1, w2) = self.w();
        [w1.re, w1.im, w2.re, w2.im]
    }

    pub fn unit_i() -> Self {
        Self::from_complex(c_i())
    }

    /// `j = -i·e1 + i·e2`
    pub fn unit_j() -> Self {
        Self::new(cplx(T::zero(), -T::one()), cplx(T::zero(), T::one()))
    }

    /// `k = ij = e1 - e2`
    pub fn unit_k() -> Self {
        Self::new(cplx(T::one(), T::zero()), cplx(-T::one(), T::zero()))
    }

    pub fn unit_e1() -> Self {
        Self::new(Complex::one(), Complex::zero())
    }

    pub fn unit_e2() -> Self {
        Self::new(Complex::zero(), Complex::one())
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Dagger1 => Self::new(c_conj(&self.z2), c_conj(&self.z1)),
            Conjugation::Dagger2 => Self::new(self.z2.clone(), self.z1.clone()),
            Conjugation::Dagger3 => Self::new(c_conj(&self.z1), c_conj(&self.z2)),
        }
    }

    /// `|Z|²_i = Z·Z^†2`, `|Z|²_j = Z·Z^†1`, `|Z|²_k = Z·Z^†3`.
    pub fn modulus(&self, kind: ModulusKind) -> Self {
        let dagger = match kind {
            ModulusKind::I => Conjugation::Dagger2,
            ModulusKind::J => Conjugation::Dagger1,
            ModulusKind::K => Conjugation::Dagger3,
        };
        self.clone() * self.conjugate(dagger)
    }

    /// `e1|z1|² + e2|z2|²`, the square of the hyperbolic-valued norm.
    pub fn norm_k_sq(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.z1.norm_sqr(), self.z2.norm_sqr())
    }

    /// Hyperbolic-valued norm `|Z|_k = e1|z1| + e2|z2|`.
    ///
    /// In the exact backend the roots are exact only for perfect squares;
    /// order comparisons between norms should go through [`Self::norm_k_sq`].
    pub fn dnorm_k(&self) -> Hyperbolic<T> {
        self.norm_k_sq().map(Real::sqrt)
    }

    /// Real part in the `D`-sense: `e1 Re z1 + e2 Re z2 = g1 + k g4`.
    pub fn hyperbolic_part(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.z1.re.clone(), self.z2.re.clone())
    }

    /// `e1 Im z1 + e2 Im z2`, so that `Z = hyperbolic_part + i·imag_part`.
    pub fn imag_part(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.z1.im.clone(), self.z2.im.clone())
    }

    /// Inverse of `u + i·v` assembled from the two hyperbolic parts.
    pub fn from_parts(u: &Hyperbolic<T>, v: &Hyperbolic<T>) -> Self {
        Self::new(
            cplx(u.e1.clone(), v.e1.clone()),
            cplx(u.e2.clone(), v.e2.clone()),
        )
    }

    pub fn scale(&self, h: &Hyperbolic<T>) -> Self {
        self.clone() * Self::from_hyperbolic(h)
    }

    pub fn is_zero_tol(&self) -> bool {
        c_is_zero_tol(&self.z1) && c_is_zero_tol(&self.z2)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        c_approx_eq(&self.z1, &other.z1) && c_approx_eq(&self.z2, &other.z2)
    }

    pub fn is_invertible(&self) -> bool {
        !c_is_zero_tol(&self.z1) && !c_is_zero_tol(&self.z2)
    }

    /// Member of the null cone: nonzero with exactly one idempotent
    /// component equal to zero.
    pub fn is_zero_divisor(&self) -> bool {
        c_is_zero_tol(&self.z1) != c_is_zero_tol(&self.z2)
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        match (c_is_zero_tol(&self.z1), c_is_zero_tol(&self.z2)) {
            (true, true) => Err(Error::ZeroDivision),
            (true, false) | (false, true) => Err(Error::NullCone),
            (false, false) => Ok(Self::new(
                Complex::<T>::one() / self.z1.clone(),
                Complex::<T>::one() / self.z2.clone(),
            )),
        }
    }

    /// Division through `Z^†2 / |Z|²_i`, the textbook route for the inverse.
    pub fn inverse_via_conjugate(&self) -> Result<Self, Error> {
        let m = self.modulus(ModulusKind::I);
        let m_inv = m.inverse()?;
        Ok(self.conjugate(Conjugation::Dagger2) * m_inv)
    }

    pub fn to_f64(&self) -> Bicomplex<f64> {
        Bicomplex::new(
            Complex::new(self.z1.re.to_f64(), self.z1.im.to_f64()),
            Complex::new(self.z2.re.to_f64(), self.z2.im.to_f64()),
        )
    }
}

impl<T: Real> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e1({} + {}i) + e2({} + {}i)",
            self.z1.re, self.z1.im, self.z2.re, self.z2.im
        )
    }
}

impl<T: Real> Zero for Bicomplex<T> {
    fn zero() -> Self {
        Self::new(Complex::zero(), Complex::zero())
    }

    fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }
}

impl<T: Real> One for Bicomplex<T> {
    fn one() -> Self {
        Self::new(Complex::one(), Complex::one())
    }
}

macro_rules! componentwise_op {
    ($Op:ident, $op:ident) => {
        impl<T: Real> $Op for Bicomplex<T> {
            type Output = Bicomplex<T>;
            fn $op(self, rhs: Self) -> Self::Output {
                Bicomplex::new(self.z1.$op(rhs.z1), self.z2.$op(rhs.z2))
            }
        }

        impl<'a, T: Real> $Op<&'a Bicomplex<T>> for &'a Bicomplex<T> {
            type Output = Bicomplex<T>;
            fn $op(self, rhs: &'a Bicomplex<T>) -> Self::Output {
                Bicomplex::new(
                    self.z1.clone().$op(rhs.z1.clone()),
                    self.z2.clone().$op(rhs.z2.clone()),
                )
            }
        }
    };
}

componentwise_op!(Add, add);
componentwise_op!(Sub, sub);
componentwise_op!(Mul, mul);

impl<T: Real> Neg for Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn neg(self) -> Self::Output {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

impl<T: Real> Neg for &Bicomplex<T> {
    type Output = Bicomplex<T>;
    fn neg(self) -> Self::Output {
        -self.clone()
    }
}

impl<T: Real> std::iter::Sum for Bicomplex<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

pub(crate) fn complex_to_json<T: Real>(z: &Complex<T>) -> serde_json::Value {
    serde_json::json!({ "re": z.re.to_json(), "im": z.im.to_json() })
}

pub(crate) fn complex_from_json<T: Real>(v: &serde_json::Value) -> Result<Complex<T>, Error> {
    let part = |key: &str| -> Result<T, Error> {
        match v.get(key) {
            Some(x) => T::from_json(x),
            None if key == "im" => Ok(T::zero()),
            None => Err(Error::Parse(format!("complex number missing {key:?}"))),
        }
    };
    Ok(Complex::new(part("re")?, part("im")?))
}

impl<T: Real> Serialize for Bicomplex<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::json!({ "z1": complex_to_json(&self.z1), "z2": complex_to_json(&self.z2) })
            .serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for Bicomplex<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(d)?;
        let get = |key: &str| -> Result<Complex<T>, D::Error> {
            let field = v
                .get(key)
                .ok_or_else(|| D::Error::custom(format!("bicomplex scalar missing {key:?}")))?;
            complex_from_json(field).map_err(D::Error::custom)
        };
        Ok(Bicomplex::new(get("z1")?, get("z2")?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type B = Bicomplex<Q>;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn c(re: i64, im: i64) -> Complex<Q> {
        Complex::new(q(re), q(im))
    }

    fn real_pair(a: i64, b: i64) -> B {
        B::new(c(a, 0), c(b, 0))
    }

    /// Multiplication carried out in `w1 + j w2` form with `j² = -1`.
    fn mul_in_w(a: &B, b: &B) -> B {
        let (a1, a2) = a.w();
        let (b1, b2) = b.w();
        let w1 = a1.clone() * b1.clone() - a2.clone() * b2.clone();
        let w2 = a1 * b2 + a2 * b1;
        B::from_w(w1, w2)
    }

    #[test]
    fn idempotent_product() {
        let a = real_pair(2, 3);
        let b = real_pair(5, 7);
        let expected = real_pair(10, 21);
        assert_eq!(a.clone() * b.clone(), expected);
        assert_eq!(mul_in_w(&a, &b), expected);
        assert!((B::unit_e1() * B::unit_e2()).is_zero());
    }

    #[test]
    fn w_coordinates() {
        let one = B::from_w(c(1, 0), c(0, 0));
        assert_eq!(one, B::one());
        let j = B::from_w(c(0, 0), c(1, 0));
        assert_eq!(j, B::new(c(0, -1), c(0, 1)));
        assert_eq!(j, B::unit_j());
        let k = B::from_w(c(0, 0), c(0, 1));
        assert_eq!(k, B::new(c(1, 0), c(-1, 0)));
        assert_eq!(B::unit_i() * B::unit_j(), B::unit_k());
        assert_eq!(B::unit_e1() - B::unit_e2(), B::unit_k());
    }

    #[test]
    fn unit_relations() {
        let (i, j, k) = (B::unit_i(), B::unit_j(), B::unit_k());
        assert_eq!(&i * &i, -B::one());
        assert_eq!(&j * &j, -B::one());
        assert_eq!(&k * &k, B::one());
        assert_eq!(&i * &k, -j.clone());
        assert_eq!(&j * &k, -i.clone());
    }

    #[test]
    fn dagger2_swaps() {
        let z = B::new(c(1, 2), c(5, 0));
        assert_eq!(z.conjugate(Conjugation::Dagger2), B::new(c(5, 0), c(1, 2)));
        // cross-check with w1 - j w2
        let (w1, w2) = z.w();
        assert_eq!(z.conjugate(Conjugation::Dagger2), B::from_w(w1, -w2));
    }

    #[test]
    fn conjugations_match_w_definitions() {
        let z = B::new(c(1, -3), c(4, 7));
        let (w1, w2) = z.w();
        let cj = |w: &Complex<Q>| Complex::new(w.re.clone(), -w.im.clone());
        assert_eq!(
            z.conjugate(Conjugation::Dagger1),
            B::from_w(cj(&w1), cj(&w2))
        );
        assert_eq!(
            z.conjugate(Conjugation::Dagger3),
            B::from_w(cj(&w1), -cj(&w2))
        );
    }

    #[test]
    fn moduli() {
        let z = B::new(c(3, 4), c(1, -1));
        assert_eq!(z.modulus(ModulusKind::K), real_pair(25, 2));
        let w = B::from_complex(c(2, 1));
        assert_eq!(w.modulus(ModulusKind::I), B::from_complex(c(3, 4)));
        assert!(B::zero().modulus(ModulusKind::K).is_zero());
    }

    #[test]
    fn dnorm_examples() {
        let z = real_pair(3, -4);
        assert_eq!(z.dnorm_k(), Hyperbolic::from_ints(3, 4));
        assert_eq!(B::unit_e1().dnorm_k(), Hyperbolic::unit_e1());
    }

    #[test]
    fn inverse_examples() {
        let z = real_pair(2, 4);
        let inv = z.inverse().unwrap();
        assert_eq!(
            inv,
            B::new(
                Complex::new(Q::from_ratio(1, 2), q(0)),
                Complex::new(Q::from_ratio(1, 4), q(0))
            )
        );
        assert_eq!(z.clone() * inv.clone(), B::one());
        assert_eq!(z.inverse_via_conjugate().unwrap(), inv);
        assert_eq!(B::one().inverse().unwrap(), B::one());
        assert!(matches!(B::unit_e1().inverse(), Err(Error::NullCone)));
        assert!(matches!(B::zero().inverse(), Err(Error::ZeroDivision)));
    }

    #[test]
    fn real_basis_round_trip() {
        let z = B::from_real_basis([q(1), q(2), q(3), q(4)]);
        assert_eq!(z.real_basis(), [q(1), q(2), q(3), q(4)]);
        assert_eq!(z.hyperbolic_part(), Hyperbolic::from_standard(q(1), q(4)));
    }

    #[test]
    fn json_shape() {
        let z = B::new(Complex::new(Q::from_ratio(1, 3), q(0)), c(-2, 5));
        let v = serde_json::to_value(&z).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"z1": {"re": "1/3", "im": "0"}, "z2": {"re": "-2", "im": "5"}})
        );
        let back: B = serde_json::from_value(v).unwrap();
        assert_eq!(back, z);
    }
}
