//! `D`-convex sets as pairs of real polytopes, absorbing tests, hyperbolic
//! Minkowski gauges, hulls and translated Minkowski differences.

mod polytope;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

pub(crate) use polytope::{centroid, convex_combination, unit};
pub use polytope::{HalfSpace, RealPolytope, Repr, MAX_CONVERSION_DIM};

use crate::error::{Error, Result};
use crate::linear::{check_dim, DVector};
use crate::scalar::{Hyperbolic, Idem, Real};

/// Vertex lists of the two component polytopes.
pub type VertexPair<T> = (Vec<Vec<T>>, Vec<Vec<T>>);

/// The set `e1·P1 + e2·P2 ⊂ D^n`, open or closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DConvexSet<T> {
    pub p1: RealPolytope<T>,
    pub p2: RealPolytope<T>,
    pub open: bool,
}

/// Value of a hyperbolic gauge; `None` marks `+∞` in that component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeValue<T> {
    pub e1: Option<T>,
    pub e2: Option<T>,
}

impl<T: Real> GaugeValue<T> {
    pub fn finite(&self) -> Option<Hyperbolic<T>> {
        Some(Hyperbolic::new(self.e1.clone()?, self.e2.clone()?))
    }
}

impl<T: Real> DConvexSet<T> {
    pub fn new(p1: RealPolytope<T>, p2: RealPolytope<T>, open: bool) -> Result<Self> {
        check_dim(p1.dim(), p2.dim())?;
        Ok(Self { p1, p2, open })
    }

    /// Product of two boxes `[lo_l, hi_l]`, in half-space form.
    pub fn boxes(lo1: &[T], hi1: &[T], lo2: &[T], hi2: &[T], open: bool) -> Result<Self> {
        Self::new(
            RealPolytope::from_box(lo1, hi1, open)?,
            RealPolytope::from_box(lo2, hi2, open)?,
            open,
        )
    }

    /// The cube `[-r, r]^n` in both components.
    pub fn cube(n: usize, r: &T, open: bool) -> Self {
        let lo = vec![-r.clone(); n];
        let hi = vec![r.clone(); n];
        Self::boxes(&lo, &hi, &lo, &hi, open).expect("equal dimensions")
    }

    pub fn dim(&self) -> usize {
        self.p1.dim()
    }

    pub fn component(&self, c: Idem) -> &RealPolytope<T> {
        match c {
            Idem::E1 => &self.p1,
            Idem::E2 => &self.p2,
        }
    }

    /// Componentwise membership; interior membership when the set is open.
    pub fn contains(&self, x: &DVector<T>) -> bool {
        x.dim() == self.dim()
            && Idem::BOTH.iter().all(|&c| {
                let p = self.component(c);
                let xc = x.component(c);
                if self.open {
                    p.contains_interior(&xc)
                } else {
                    p.contains(&xc)
                }
            })
    }

    pub fn contains_closure(&self, x: &DVector<T>) -> bool {
        x.dim() == self.dim()
            && Idem::BOTH
                .iter()
                .all(|&c| self.component(c).contains_closed(&x.component(c)))
    }

    /// Vertex lists of both components.
    pub fn vertices(&self) -> Result<VertexPair<T>> {
        Ok((self.p1.vertices()?, self.p2.vertices()?))
    }

    /// Componentwise vertex centroid.
    pub fn centroid(&self) -> Result<DVector<T>> {
        DVector::from_components(&self.p1.vertex_centroid()?, &self.p2.vertex_centroid()?)
    }

    /// Componentwise gauge, possibly infinite.
    pub fn gauge_value(&self, x: &DVector<T>) -> Result<GaugeValue<T>> {
        check_dim(self.dim(), x.dim())?;
        Ok(GaugeValue {
            e1: self.p1.gauge(&x.component(Idem::E1)),
            e2: self.p2.gauge(&x.component(Idem::E2)),
        })
    }

    /// The dilate `s·B` for `s >' 0`.
    pub fn scaled(&self, s: &Hyperbolic<T>) -> Self {
        Self {
            p1: self.p1.scaled(&s.e1),
            p2: self.p2.scaled(&s.e2),
            open: self.open,
        }
    }

    pub fn to_f64(&self) -> DConvexSet<f64> {
        DConvexSet {
            p1: self.p1.to_f64(),
            p2: self.p2.to_f64(),
            open: self.open,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "p1": self.p1.to_json(), "p2": self.p2.to_json(), "open": self.open })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("D-convex set missing {k:?}")))
        };
        let open = match v.get("open") {
            None => false,
            Some(o) => o
                .as_bool()
                .ok_or_else(|| Error::Parse("\"open\" must be a boolean".into()))?,
        };
        Self::new(
            RealPolytope::from_json(get("p1")?)?,
            RealPolytope::from_json(get("p2")?)?,
            open,
        )
    }
}

impl<T: Real> Serialize for DConvexSet<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for DConvexSet<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// Stacks `x = e1·x1 + e2·x2` into the real vector `[x1; x2] ∈ R^{2n}`.
fn stacked<T: Real>(x: &DVector<T>) -> Vec<T> {
    let (mut a, b) = x.components();
    a.extend(b);
    a
}

/// Decides whether the finite set `S`, read as the real convex polytope
/// `conv(S) ⊂ R^{2n}`, is `D`-convex.
///
/// `D`-convexity means closure under `λx + (1-λ)y` with `0 ≤' λ ≤' 1`. Taking
/// `λ = e1` gives the mixed points `e1·x1 + e2·y2`, and the set is
/// `D`-convex exactly when all of them lie in `conv(S)`, that is when
/// `conv(S) = conv(S1) × conv(S2)`. Each mixed point is checked by an exact
/// membership LP.
pub fn is_dconvex<T: Real>(points: &[DVector<T>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let stacked_pts: Vec<Vec<T>> = points.iter().map(stacked).collect();
    points.iter().all(|x| {
        points.iter().all(|y| {
            let mixed = DVector::from_components(&x.component(Idem::E1), &y.component(Idem::E2))
                .expect("points share a dimension");
            convex_combination(&stacked_pts, &stacked(&mixed), false).is_some()
        })
    })
}

/// Smallest `D`-convex superset: the pair of component hulls, given by their
/// extreme points.
pub fn dconvex_hull<T: Real>(points: &[DVector<T>]) -> Result<DConvexSet<T>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    for p in points {
        check_dim(first.dim(), p.dim())?;
    }
    let hull = |c: Idem| -> Result<RealPolytope<T>> {
        let vs = points.iter().map(|p| p.component(c)).collect();
        RealPolytope::from_vertices(RealPolytope::from_vertices(vs)?.extreme_vertices()?)
    };
    DConvexSet::new(hull(Idem::E1)?, hull(Idem::E2)?, false)
}

/// `0` is interior to both component polytopes.
pub fn is_dabsorbing<T: Real>(b: &DConvexSet<T>) -> bool {
    b.p1.is_absorbing() && b.p2.is_absorbing()
}

/// Hyperbolic Minkowski functional `q_B(x) = e1 q_{P1}(x1) + e2 q_{P2}(x2)`.
pub fn minkowski_gauge<T: Real>(b: &DConvexSet<T>, x: &DVector<T>) -> Result<Hyperbolic<T>> {
    for c in Idem::BOTH {
        if !b.component(c).is_absorbing() {
            return Err(Error::NotAbsorbing(c));
        }
    }
    b.gauge_value(x)?
        .finite()
        .ok_or_else(|| Error::Internal("absorbing set produced an infinite gauge".into()))
}

/// `G = A - B + x0` with `x0 = b0 - a0`, in vertex form per component.
pub fn minkowski_diff_translate<T: Real>(
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
    a0: &DVector<T>,
    b0: &DVector<T>,
) -> Result<DConvexSet<T>> {
    check_dim(a.dim(), b.dim())?;
    if !a.contains(a0) {
        return Err(Error::Membership("first".into()));
    }
    if !b.contains(b0) && !b.contains_closure(b0) {
        return Err(Error::Membership("second".into()));
    }
    let x0 = b0 - a0;
    let comp = |c: Idem| -> Result<RealPolytope<T>> {
        let va = a.component(c).extreme_vertices()?;
        let vb = b.component(c).extreme_vertices()?;
        let shift = x0.component(c);
        let mut out: Vec<Vec<T>> = Vec::new();
        for p in &va {
            for q in &vb {
                let v: Vec<T> = (0..p.len())
                    .map(|k| p[k].clone() - q[k].clone() + shift[k].clone())
                    .collect();
                if !out.iter().any(|w| w == &v) {
                    out.push(v);
                }
            }
        }
        RealPolytope::from_vertices(out)
    };
    DConvexSet::new(comp(Idem::E1)?, comp(Idem::E2)?, a.open)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn d1(a: i64, b: i64) -> DVector<Rational> {
        DVector(vec![Hyperbolic::<Rational>::from_ints(a, b)])
    }

    #[test]
    fn gauge_of_unit_box() {
        let b = DConvexSet::cube(1, &q(1), false);
        assert_eq!(
            minkowski_gauge(&b, &d1(2, 3)).unwrap(),
            Hyperbolic::from_ints(2, 3)
        );
        assert_eq!(
            minkowski_gauge(&b, &d1(0, 0)).unwrap(),
            Hyperbolic::from_ints(0, 0)
        );
        assert_eq!(
            minkowski_gauge(&b, &d1(1, -1)).unwrap(),
            Hyperbolic::from_ints(1, 1)
        );
    }

    #[test]
    fn absorbing_examples() {
        assert!(is_dabsorbing(&DConvexSet::cube(2, &q(1), false)));
        let shifted = DConvexSet::boxes(&[q(1)], &[q(2)], &[q(-1)], &[q(1)], false).unwrap();
        assert!(!is_dabsorbing(&shifted));
        assert!(matches!(
            minkowski_gauge(&shifted, &d1(1, 1)),
            Err(Error::NotAbsorbing(Idem::E1))
        ));
        let whole = DConvexSet::new(
            RealPolytope::<Rational>::from_halfspaces(1, vec![]).unwrap(),
            RealPolytope::from_halfspaces(1, vec![]).unwrap(),
            true,
        )
        .unwrap();
        assert!(is_dabsorbing(&whole));
    }

    #[test]
    fn dconvexity_of_pairs_and_products() {
        let x = d1(0, 0);
        let y = d1(1, 1);
        assert!(is_dconvex(std::slice::from_ref(&x)));
        assert!(!is_dconvex(&[x.clone(), y.clone()]));
        assert!(is_dconvex(&[x, y, d1(0, 1), d1(1, 0)]));
    }

    #[test]
    fn hull_and_difference() {
        let h = dconvex_hull(&[d1(0, 0), d1(4, 0)]).unwrap();
        assert_eq!(h.p1.vertices().unwrap().len(), 2);
        assert_eq!(h.p2.vertices().unwrap(), vec![vec![q(0)]]);

        let a = DConvexSet::cube(1, &q(1), true);
        let b = DConvexSet::new(
            RealPolytope::point(vec![q(2)]),
            RealPolytope::point(vec![q(2)]),
            false,
        )
        .unwrap();
        let g = minkowski_diff_translate(&a, &b, &d1(0, 0), &d1(2, 2)).unwrap();
        let mut vs = g.p1.vertices().unwrap();
        vs.sort();
        assert_eq!(vs, vec![vec![q(-1)], vec![q(1)]]);
        assert!(g.contains_closure(&d1(0, 0)));
        assert!(matches!(
            minkowski_diff_translate(&a, &b, &d1(5, 0), &d1(2, 2)),
            Err(Error::Membership(_))
        ));
    }
}
