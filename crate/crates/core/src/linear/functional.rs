use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::vector::{check_dim, real_dot, BCVector, DVector};
use crate::error::Result;
use crate::scalar::{Bicomplex, Hyperbolic, Idem, Real};

/// `D`-linear functional `f(x) = Σ c_m x_m` on `D^n`.
///
/// Stored by coefficients, so `D`-linearity holds by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct DLinearFunctional<T> {
    pub coeffs: DVector<T>,
}

/// `BC`-linear functional `h(x) = Σ c_m x_m` on `BC^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct BCLinearFunctional<T> {
    pub coeffs: BCVector<T>,
}

/// Reconstruction axis for recovering `h` from its hyperbolic part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// `h(x) = f(x) - i·f(i·x)`
    I,
    /// `h(x) = f(x) - j·f(j·x)`
    J,
}

impl<T: Real> DLinearFunctional<T> {
    pub fn new(coeffs: DVector<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(DVector::zeros(n))
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    /// Direct evaluation `Σ c_m x_m` in `D`.
    pub fn eval(&self, x: &DVector<T>) -> Result<Hyperbolic<T>> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.coeffs.0.iter().zip(&x.0).map(|(c, v)| c * v).sum())
    }

    /// Evaluation through the split `e1·f1(x1) + e2·f2(x2)` with the real
    /// component functionals.
    pub fn eval_split(&self, x: &DVector<T>) -> Result<Hyperbolic<T>> {
        check_dim(self.dim(), x.dim())?;
        let (f1, f2) = self.split();
        let (x1, x2) = x.components();
        Ok(Hyperbolic::new(real_dot(&f1, &x1), real_dot(&f2, &x2)))
    }

    /// Coefficient vectors of the real functionals `f1` on `X1` and `f2` on `X2`.
    pub fn split(&self) -> (Vec<T>, Vec<T>) {
        self.coeffs.components()
    }

    pub fn component(&self, c: Idem) -> Vec<T> {
        self.coeffs.component(c)
    }

    pub fn from_split(f1: &[T], f2: &[T]) -> Result<Self> {
        Ok(Self::new(DVector::from_components(f1, f2)?))
    }

    pub fn scale(&self, alpha: &Hyperbolic<T>) -> Self {
        Self::new(self.coeffs.scale(alpha))
    }

    /// Evaluates on `BC^n` through the realification `x = u + i·v`; the
    /// functional must live on `D^{2n}`.
    pub fn eval_on_bc(&self, x: &BCVector<T>) -> Result<Hyperbolic<T>> {
        self.eval(&x.realify())
    }

    /// Both component coefficient vectors are nonzero, so `f` takes an
    /// invertible value somewhere.
    pub fn takes_invertible_value(&self) -> bool {
        Idem::BOTH
            .iter()
            .all(|&c| self.component(c).iter().any(|v| !v.is_zero_tol()))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.coeffs.approx_eq(&other.coeffs)
    }
}

impl<T: Real> BCLinearFunctional<T> {
    pub fn new(coeffs: BCVector<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(BCVector::zeros(n))
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    pub fn eval(&self, x: &BCVector<T>) -> Result<Bicomplex<T>> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.coeffs.0.iter().zip(&x.0).map(|(c, v)| c * v).sum())
    }

    /// Complex coefficient vectors of `H1`, `H2` with `h = e1·H1 + e2·H2`.
    pub fn split(&self) -> (Vec<Complex<T>>, Vec<Complex<T>>) {
        self.coeffs.components()
    }

    pub fn from_split(h1: &[Complex<T>], h2: &[Complex<T>]) -> Result<Self> {
        Ok(Self::new(BCVector::from_components(h1, h2)?))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.coeffs.approx_eq(&other.coeffs)
    }
}

/// Hyperbolic part `h_D = g1 + k·g4` of a `BC`-linear functional, returned as
/// a `D`-linear functional on the realification `D^{2n}` of `BC^n`.
///
/// Computed with the idempotent formula `h_D(x) = e1 Re H1(x1) + e2 Re H2(x2)`.
/// Writing `c = p + i·r` and `x = u + i·v` gives `h_D(x) = p·u - r·v`.
pub fn hyperbolic_part<T: Real>(h: &BCLinearFunctional<T>) -> DLinearFunctional<T> {
    let n = h.dim();
    let mut coeffs = Vec::with_capacity(2 * n);
    coeffs.extend(h.coeffs.0.iter().map(Bicomplex::hyperbolic_part));
    coeffs.extend(h.coeffs.0.iter().map(|c| -c.imag_part()));
    DLinearFunctional::new(DVector(coeffs))
}

/// Recovers the unique `BC`-linear `h` whose hyperbolic part is `f`, by
/// literally evaluating `h(x) = f(x) - i·f(i·x)` (or the `j` form) on the
/// standard basis of `BC^n`.
///
/// `f` must act on `D^{2n}`, the realification of `BC^n`.
pub fn reconstruct<T: Real>(f: &DLinearFunctional<T>, axis: Axis) -> Result<BCLinearFunctional<T>> {
    if !f.dim().is_multiple_of(2) {
        return Err(crate::Error::DimensionMismatch {
            expected: f.dim() + 1,
            found: f.dim(),
        });
    }
    let n = f.dim() / 2;
    let unit = match axis {
        Axis::I => Bicomplex::unit_i(),
        Axis::J => Bicomplex::unit_j(),
    };
    let coeffs = (0..n)
        .map(|m| {
            let e = BCVector::unit(n, m);
            let fx = Bicomplex::from_hyperbolic(&f.eval_on_bc(&e)?);
            let f_ux = Bicomplex::from_hyperbolic(&f.eval_on_bc(&e.scale(&unit))?);
            Ok(fx - unit.clone() * f_ux)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BCLinearFunctional::new(BCVector(coeffs)))
}

/// Evaluates `h(x) = f(x) - i·f(i·x)` (or the `j` form) at a single point
/// without building coefficients.
pub fn reconstruct_eval<T: Real>(
    f: &DLinearFunctional<T>,
    axis: Axis,
    x: &BCVector<T>,
) -> Result<Bicomplex<T>> {
    let unit = match axis {
        Axis::I => Bicomplex::unit_i(),
        Axis::J => Bicomplex::unit_j(),
    };
    let fx = Bicomplex::from_hyperbolic(&f.eval_on_bc(x)?);
    let f_ux = Bicomplex::from_hyperbolic(&f.eval_on_bc(&x.scale(&unit))?);
    Ok(fx - unit * f_ux)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn identity_functional_on_d1() {
        let f = DLinearFunctional::new(DVector(vec![Hyperbolic::<Rational>::from_ints(1, 1)]));
        let x = DVector(vec![Hyperbolic::<Rational>::from_ints(2, 3)]);
        assert_eq!(f.eval(&x).unwrap(), Hyperbolic::<Rational>::from_ints(2, 3));
        assert_eq!(
            f.eval_split(&x).unwrap(),
            Hyperbolic::<Rational>::from_ints(2, 3)
        );
        assert!(f.eval(&DVector::zeros(1)).unwrap().is_zero());
        assert!(f.eval(&DVector::zeros(2)).is_err());
    }

    #[test]
    fn split_of_coefficients() {
        let f = DLinearFunctional::new(DVector(vec![
            Hyperbolic::<Rational>::from_ints(4, -1),
            Hyperbolic::<Rational>::from_ints(0, 2),
        ]));
        let (a, b) = f.split();
        assert_eq!(a, vec![q(4), q(0)]);
        assert_eq!(b, vec![q(-1), q(2)]);
        assert_eq!(DLinearFunctional::from_split(&a, &b).unwrap(), f);
        let z = DLinearFunctional::<Rational>::zero(3);
        assert!(z
            .split()
            .0
            .iter()
            .chain(z.split().1.iter())
            .all(Zero::is_zero));
    }

    #[test]
    fn hyperbolic_part_of_identity() {
        // x = 1 + 2i + 3j + 4k, h = identity on BC^1: h_D(x) = g1 + k g4 = 1 + 4k
        let h = BCLinearFunctional::new(BCVector(vec![Bicomplex::from_real(q(1))]));
        let x = BCVector(vec![Bicomplex::from_real_basis([q(1), q(2), q(3), q(4)])]);
        let hd = hyperbolic_part(&h);
        assert_eq!(
            hd.eval_on_bc(&x).unwrap(),
            Hyperbolic::from_standard(q(1), q(4))
        );
    }

    #[test]
    fn reconstruct_zero_and_axes() {
        let f = DLinearFunctional::<Rational>::zero(4);
        assert!(reconstruct(&f, Axis::I)
            .unwrap()
            .coeffs
            .0
            .iter()
            .all(Zero::is_zero));
        let f = DLinearFunctional::new(DVector(vec![
            Hyperbolic::<Rational>::from_ints(1, 2),
            Hyperbolic::<Rational>::from_ints(-3, 5),
        ]));
        let hi = reconstruct(&f, Axis::I).unwrap();
        let hj = reconstruct(&f, Axis::J).unwrap();
        assert_eq!(hi, hj);
        assert_eq!(hyperbolic_part(&hi), f);
        assert!(reconstruct(&DLinearFunctional::<Rational>::zero(3), Axis::I).is_err());
    }
}
