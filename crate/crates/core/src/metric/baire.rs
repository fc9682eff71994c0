use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::DBall;
use crate::error::{Error, Result};
use crate::linear::DVector;
use crate::scalar::{inv_pow2, Hyperbolic, Idem, Real};

/// Closed rectangle `e1·[lo1, hi1] + e2·[lo2, hi2] ⊂ D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectSet<T> {
    pub c1: (T, T),
    pub c2: (T, T),
}

impl<T: Real> RectSet<T> {
    pub fn new(c1: (T, T), c2: (T, T)) -> Result<Self> {
        if c1.1 < c1.0 || c2.1 < c2.0 {
            return Err(Error::Parse(
                "rectangle needs lo <= hi in both components".into(),
            ));
        }
        Ok(Self { c1, c2 })
    }

    pub fn interval(&self, c: Idem) -> (&T, &T) {
        match c {
            Idem::E1 => (&self.c1.0, &self.c1.1),
            Idem::E2 => (&self.c2.0, &self.c2.1),
        }
    }

    pub fn contains(&self, p: &Hyperbolic<T>) -> bool {
        Idem::BOTH.iter().all(|&c| {
            let (lo, hi) = self.interval(c);
            let v = p.component(c);
            lo <= v && v <= hi
        })
    }

    /// Exact containment of the open ball (an open rectangle in `D`).
    pub fn contains_ball(&self, ball: &DBall<T>) -> bool {
        let x = &ball.center.0[0];
        Idem::BOTH.iter().all(|&c| {
            let (lo, hi) = self.interval(c);
            let (m, r) = (x.component(c).clone(), ball.radius.component(c).clone());
            *lo <= m.clone() - r.clone() && m + r <= *hi
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "c1": [self.c1.0.to_json(), self.c1.1.to_json()],
            "c2": [self.c2.0.to_json(), self.c2.1.to_json()],
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let pair = |k: &str| -> Result<(T, T)> {
            let a = v
                .get(k)
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("rectangle needs {k:?} as [lo, hi]")))?;
            Ok((T::from_json(&a[0])?, T::from_json(&a[1])?))
        };
        Self::new(pair("c1")?, pair("c2")?)
    }
}

impl<T: Real> Serialize for RectSet<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for RectSet<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_json(&Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Breakpoints of one axis inside `[lo, hi]` plus midpoints between them:
/// every cell of the induced grid has a representative.
fn axis_samples<T: Real>(lo: &T, hi: &T, sets: &[RectSet<T>], c: Idem) -> Vec<T> {
    let mut cuts = vec![lo.clone(), hi.clone()];
    for s in sets {
        let (a, b) = s.interval(c);
        for v in [a, b] {
            if lo < v && v < hi {
                cuts.push(v.clone());
            }
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("ordered backend"));
    cuts.dedup();
    let mut out = cuts.clone();
    for w in cuts.windows(2) {
        out.push((w[0].clone() + w[1].clone()).half());
    }
    out
}

/// Checks that the rectangles cover the bounding box, by coordinate
/// compression: a sample point in every cell and on every cut line.
pub fn check_cover<T: Real>(bbox: &RectSet<T>, sets: &[RectSet<T>]) -> Result<()> {
    let xs = axis_samples(&bbox.c1.0, &bbox.c1.1, sets, Idem::E1);
    let ys = axis_samples(&bbox.c2.0, &bbox.c2.1, sets, Idem::E2);
    for x in &xs {
        for y in &ys {
            let p = Hyperbolic::new(x.clone(), y.clone());
            if !sets.iter().any(|s| s.contains(&p)) {
                return Err(Error::NotACover(x.to_string(), y.to_string()));
            }
        }
    }
    Ok(())
}

/// One step of the nested-ball construction: a point outside `F_index`
/// with a radius keeping the ball clear of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaireStep<T> {
    pub index: usize,
    pub point: Hyperbolic<T>,
    pub radius: Hyperbolic<T>,
}

/// A set of the cover together with an open ball inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaireWitness<T> {
    pub index: usize,
    pub ball: DBall<T>,
    pub steps: Vec<BaireStep<T>>,
}

/// Some point of the open rectangle `center ± half` outside `rect`.
fn point_outside<T: Real>(
    center: &Hyperbolic<T>,
    half: &Hyperbolic<T>,
    rect: &RectSet<T>,
) -> Option<Hyperbolic<T>> {
    let quarter = half.map(Real::half);
    let zero = T::zero();
    let offsets = [
        (zero.clone(), zero.clone()),
        (quarter.e1.clone(), zero.clone()),
        (-quarter.e1.clone(), zero.clone()),
        (zero.clone(), quarter.e2.clone()),
        (zero.clone(), -quarter.e2.clone()),
        (quarter.e1.clone(), quarter.e2.clone()),
        (quarter.e1.clone(), -quarter.e2.clone()),
        (-quarter.e1.clone(), quarter.e2.clone()),
        (-quarter.e1.clone(), -quarter.e2.clone()),
    ];
    for (d1, d2) in offsets {
        let p = Hyperbolic::new(center.e1.clone() + d1, center.e2.clone() + d2);
        if !rect.contains(&p) {
            return Some(p);
        }
    }
    // Interval subtraction: a component where the open interval sticks out.
    for c in Idem::BOTH {
        let (lo, hi) = rect.interval(c);
        let (m, r) = (center.component(c).clone(), half.component(c).clone());
        let (a, b) = (m.clone() - r.clone(), m + r);
        let coord = if a < *lo {
            Some((a.clone() + lo.clone().min_of(b.clone())).half())
        } else if *hi < b {
            Some((b + hi.clone().max_of(a)).half())
        } else {
            None
        };
        if let Some(v) = coord {
            let mut p = center.clone();
            match c {
                Idem::E1 => p.e1 = v,
                Idem::E2 => p.e2 = v,
            }
            return Some(p);
        }
    }
    None
}

fn as_ball<T: Real>(center: &Hyperbolic<T>, radius: &Hyperbolic<T>) -> Result<DBall<T>> {
    DBall::new(DVector(vec![center.clone()]), radius.clone())
}

/// Finds a set of a finite closed cover of the bounding box that contains
/// an open ball, by the nested-ball construction.
///
/// Starting from the center of the box, step `m` looks for a point of the
/// half-ball `B(x_{m-1}, ε_{m-1}/2)` outside `F_m`. If there is none the
/// half-ball lies in `F_m` and is returned. Otherwise the point becomes
/// `x_m` with a radius `ε_m <' 1/2^m` small enough that `B(x_m, ε_m)` stays
/// in the half-ball and misses `F_m`.
pub fn baire_witness<T: Real>(bbox: &RectSet<T>, cover: &[RectSet<T>]) -> Result<BaireWitness<T>> {
    if !(bbox.c1.0 < bbox.c1.1 && bbox.c2.0 < bbox.c2.1) {
        return Err(Error::Unsupported(
            "bounding box must have nonempty interior".into(),
        ));
    }
    check_cover(bbox, cover)?;
    let mut center = Hyperbolic::new(
        (bbox.c1.0.clone() + bbox.c1.1.clone()).half(),
        (bbox.c2.0.clone() + bbox.c2.1.clone()).half(),
    );
    let mut radius = Hyperbolic::new(
        (bbox.c1.1.clone() - bbox.c1.0.clone()).half(),
        (bbox.c2.1.clone() - bbox.c2.0.clone()).half(),
    );
    let mut steps = Vec::new();
    for (m, rect) in cover.iter().enumerate() {
        let half = radius.map(Real::half);
        let Some(p) = point_outside(&center, &half, rect) else {
            let ball = as_ball(&center, &half)?;
            debug_assert!(rect.contains_ball(&ball));
            return Ok(BaireWitness {
                index: m,
                ball,
                steps,
            });
        };
        let bound = inv_pow2::<T>(m as u32 + 2);
        let mut next = Hyperbolic::from_real(bound);
        for c in Idem::BOTH {
            let (pc, mc, hc) = (
                p.component(c).clone(),
                center.component(c).clone(),
                half.component(c).clone(),
            );
            let to_edge = (pc.clone() - (mc.clone() - hc.clone())).min_of(mc + hc - pc);
            let v = next.component(c).clone().min_of(to_edge);
            match c {
                Idem::E1 => next.e1 = v,
                Idem::E2 => next.e2 = v,
            }
        }
        // Keep the ball clear of the rectangle along the widest gap.
        let gap = |c: Idem| -> Option<T> {
            let (lo, hi) = rect.interval(c);
            let v = p.component(c);
            if v < lo {
                Some(lo.clone() - v.clone())
            } else if hi < v {
                Some(v.clone() - hi.clone())
            } else {
                None
            }
        };
        let (g1, g2) = (gap(Idem::E1), gap(Idem::E2));
        match (g1, g2) {
            (Some(a), Some(b)) if b > a => next.e2 = next.e2.clone().min_of(b),
            (Some(a), _) => next.e1 = next.e1.clone().min_of(a),
            (None, Some(b)) => next.e2 = next.e2.clone().min_of(b),
            (None, None) => {
                return Err(Error::Internal("chosen point lies in the rectangle".into()))
            }
        }
        steps.push(BaireStep {
            index: m,
            point: p.clone(),
            radius: next.clone(),
        });
        center = p;
        radius = next;
    }
    Err(Error::NotACover(
        center.e1.to_string(),
        center.e2.to_string(),
    ))
}
