use super::functional::{BCLinearFunctional, DLinearFunctional};
use super::vector::{check_dim, real_dot};
use crate::convex::{DConvexSet, RealPolytope};
use crate::error::{Error, Result};
use crate::scalar::{Idem, Real};

/// Real interval; `None` endpoints are infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval<T> {
    pub lo: Option<T>,
    pub hi: Option<T>,
    pub open: bool,
}

impl<T: Real> Interval<T> {
    pub fn contains(&self, v: &T) -> bool {
        let above = match &self.lo {
            None => true,
            Some(lo) if self.open => lo.lt_tol(v),
            Some(lo) => lo.le_tol(v),
        };
        let below = match &self.hi {
            None => true,
            Some(hi) if self.open => v.lt_tol(hi),
            Some(hi) => v.le_tol(hi),
        };
        above && below
    }
}

/// The image `e1·I1 + e2·I2` of a `D`-convex set under a `D`-linear functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPair<T> {
    pub c1: Interval<T>,
    pub c2: Interval<T>,
}

/// Image of `A` under `f`, one interval per idempotent component.
///
/// Both component functionals must be nonzero; the intervals are open when
/// `A` is.
pub fn image_convex<T: Real>(
    f: &DLinearFunctional<T>,
    a: &DConvexSet<T>,
) -> Result<IntervalPair<T>> {
    check_dim(f.dim(), a.dim())?;
    let interval = |c: Idem| -> Result<Interval<T>> {
        let coeffs = f.component(c);
        if coeffs.iter().all(Real::is_zero_tol) {
            return Err(Error::ConstantComponent(c));
        }
        let p = a.component(c);
        Ok(Interval {
            lo: p.minimize(&coeffs),
            hi: p.maximize(&coeffs),
            open: a.open,
        })
    };
    Ok(IntervalPair {
        c1: interval(Idem::E1)?,
        c2: interval(Idem::E2)?,
    })
}

/// Image of `A ⊂ D^{2n}` (the realification of `BC^n`) under a `BC`-linear
/// functional: a pair of convex polygons in `C ≅ R^2`, one per component.
pub fn image_convex_bc<T: Real>(
    h: &BCLinearFunctional<T>,
    a: &DConvexSet<T>,
) -> Result<DConvexSet<T>> {
    check_dim(2 * h.dim(), a.dim())?;
    let n = h.dim();
    let (h1, h2) = h.split();
    let polygon = |c: Idem, coeffs: &[num_complex::Complex<T>]| -> Result<RealPolytope<T>> {
        if coeffs
            .iter()
            .all(|z| z.re.is_zero_tol() && z.im.is_zero_tol())
        {
            return Err(Error::ConstantComponent(c));
        }
        // H(u + i v) = Σ c_m (u_m + i v_m); real and imaginary parts as rows
        let re_row: Vec<T> = coeffs
            .iter()
            .map(|z| z.re.clone())
            .chain(coeffs.iter().map(|z| -z.im.clone()))
            .collect();
        let im_row: Vec<T> = coeffs
            .iter()
            .map(|z| z.im.clone())
            .chain(coeffs.iter().map(|z| z.re.clone()))
            .collect();
        let images = a
            .component(c)
            .vertices()?
            .iter()
            .map(|v| vec![real_dot(&re_row, v), real_dot(&im_row, v)])
            .collect();
        RealPolytope::from_vertices(RealPolytope::from_vertices(images)?.extreme_vertices()?)
    };
    debug_assert_eq!(h1.len(), n);
    DConvexSet::new(polygon(Idem::E1, &h1)?, polygon(Idem::E2, &h2)?, a.open)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::DVector;
    use crate::scalar::Hyperbolic;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn interval_images() {
        let a = DConvexSet::cube(1, &q(1), true);
        let id = DLinearFunctional::new(DVector(vec![Hyperbolic::from_ints(1, 1)]));
        let img = image_convex(&id, &a).unwrap();
        assert_eq!(
            img.c1,
            Interval {
                lo: Some(q(-1)),
                hi: Some(q(1)),
                open: true
            }
        );
        let f = DLinearFunctional::new(DVector(vec![Hyperbolic::from_ints(2, 3)]));
        let img = image_convex(&f, &a).unwrap();
        assert_eq!(
            (img.c1.hi.clone(), img.c2.lo.clone()),
            (Some(q(2)), Some(q(-3)))
        );
        assert!(!img.c1.contains(&q(2)));
        let g = DLinearFunctional::new(DVector(vec![Hyperbolic::from_ints(0, 3)]));
        assert!(matches!(
            image_convex(&g, &a),
            Err(Error::ConstantComponent(Idem::E1))
        ));
    }
}
