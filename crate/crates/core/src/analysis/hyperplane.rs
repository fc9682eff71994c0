use serde::{Deserialize, Serialize};

use super::extension::{extend_values, ComponentGauge};
use crate::convex::{minkowski_gauge, DConvexSet};
use crate::error::{Error, Result};
use crate::linear::{check_dim, rank_of, real_dot, DLinearFunctional, DVector};
use crate::order::le;
use crate::scalar::{Hyperbolic, Idem, Real};

/// `D`-hyperplane `{x : f(x) = level}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real", deserialize = "T: Real"))]
pub struct DHyperplane<T> {
    pub f: DLinearFunctional<T>,
    pub level: Hyperbolic<T>,
}

impl<T: Real> DHyperplane<T> {
    pub fn new(f: DLinearFunctional<T>, level: Hyperbolic<T>) -> Self {
        Self { f, level }
    }

    pub fn dim(&self) -> usize {
        self.f.dim()
    }

    pub fn contains(&self, x: &DVector<T>) -> bool {
        self.f
            .eval(x)
            .map(|v| v.approx_eq(&self.level))
            .unwrap_or(false)
    }

    /// Equivalent form at level 1.
    pub fn normalized(&self) -> Result<Self> {
        hyperplane_normalize(&self.f, &self.level)
    }

    /// Both describe the same set; decided on the level-1 forms, which are
    /// unique.
    pub fn same_set(&self, other: &Self) -> Result<bool> {
        Ok(self.normalized()?.f.approx_eq(&other.normalized()?.f))
    }
}

/// Brings `{g = c}` to the form `{f = 1}` with `f = g / c`.
pub fn hyperplane_normalize<T: Real>(
    g: &DLinearFunctional<T>,
    c: &Hyperbolic<T>,
) -> Result<DHyperplane<T>> {
    if !c.is_invertible() {
        return Err(Error::ZeroDivisorLevel);
    }
    for comp in Idem::BOTH {
        if g.component(comp).iter().all(|v| v.is_zero_tol()) {
            return Err(Error::DegenerateFunctional(comp));
        }
    }
    Ok(DHyperplane::new(
        g.scale(&c.inverse()?),
        Hyperbolic::from_real(T::one()),
    ))
}

fn absorbing_or_err<T: Real>(b: &DConvexSet<T>) -> Result<()> {
    for c in Idem::BOTH {
        if !b.component(c).is_absorbing() {
            return Err(Error::NotAbsorbing(c));
        }
    }
    Ok(())
}

/// `-q(-x) ≤' f(x) ≤' q(x)` at one point.
pub fn gauge_sandwich_holds<T: Real>(
    f: &DLinearFunctional<T>,
    b: &DConvexSet<T>,
    x: &DVector<T>,
) -> Result<bool> {
    let fx = f.eval(x)?;
    let upper = minkowski_gauge(b, x)?;
    let lower = -minkowski_gauge(b, &-x)?;
    Ok(le(&lower, &fx) && le(&fx, &upper))
}

/// Deterministic grid of `count` points of `D^n` with coordinates in
/// `[-5/2, 5/2]` on a step of `1/4`, spread by coprime strides.
pub fn sample_grid<T: Real>(n: usize, count: usize) -> Vec<DVector<T>> {
    grid(n, count, 4)
}

/// [`sample_grid`] scaled by 4: the same rays with integer coordinates.
pub fn integer_grid<T: Real>(n: usize, count: usize) -> Vec<DVector<T>> {
    grid(n, count, 1)
}

fn grid<T: Real>(n: usize, count: usize, den: i64) -> Vec<DVector<T>> {
    (0..count)
        .map(|k| {
            let coord = |i: usize, salt: usize| {
                let v = ((k * (2 * i + 3 + salt) + 7 * i + salt) % 21) as i64 - 10;
                if den == 1 {
                    T::from_i64(v)
                } else {
                    T::from_ratio(v, den)
                }
            };
            DVector(
                (0..n)
                    .map(|i| Hyperbolic::new(coord(i, 0), coord(i, 11)))
                    .collect(),
            )
        })
        .collect()
}

/// Number of grid points used by [`hyperplane_gauge_bound`].
pub const GAUGE_GRID_POINTS: usize = 1000;

/// For an absorbing `B` missing `L` in both components, returns `f` with
/// `L = {f = 1}` and `-q_B(-x) ≤' f(x) ≤' q_B(x)`.
///
/// Disjointness is decided by maximizing each component of `f` over the
/// component polytope: the maximum must stay below 1 (at most 1 for open
/// `B`). The sandwich is then re-checked on all vertices and a fixed grid,
/// component by component.
pub fn hyperplane_gauge_bound<T: Real>(
    b: &DConvexSet<T>,
    l: &DHyperplane<T>,
) -> Result<DLinearFunctional<T>> {
    check_dim(b.dim(), l.dim())?;
    absorbing_or_err(b)?;
    let f = l.normalized()?.f;
    for c in Idem::BOTH {
        let (best, at) = b
            .component(c)
            .maximize_point(&f.component(c))
            .ok_or_else(|| Error::Internal("bounded polytope has no maximizer".into()))?;
        let meets = if b.open {
            T::one().lt_tol(&best)
        } else {
            !best.lt_tol(&T::one())
        };
        if meets {
            let witness = at
                .iter()
                .map(|v| (v.clone() / best.clone()).to_string())
                .collect();
            return Err(Error::NotDisjoint {
                component: c,
                witness,
            });
        }
    }
    // Every test below is positively homogeneous in the point.
    let grid = integer_grid::<T>(b.dim(), GAUGE_GRID_POINTS);
    for c in Idem::BOTH {
        // With facet rows `r_i = a_i / b_i`, `q(x) = max(0, max_i r_i·x)` and
        // `-q(-x) = min(0, min_i r_i·x)`; every test is a sign of a linear form.
        let ComponentGauge::Faces(rows) =
            ComponentGauge::of(&b.component(c).to_halfspace_form(false)?, c)?
        else {
            return Err(Error::Internal("facet form expected".into()));
        };
        let fc = f.component(c);
        let gaps: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                T::clear_denominators(
                    &r.iter()
                        .zip(&fc)
                        .map(|(a, b)| a.clone() - b.clone())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        let fc = T::clear_denominators(&fc);
        let vertices = b.component(c).vertices()?;
        for x in vertices
            .into_iter()
            .chain(grid.iter().map(|x| x.component(c)))
        {
            let x = T::clear_denominators(&x);
            let fx = real_dot(&fc, &x);
            let dots: Vec<T> = gaps.iter().map(|g| real_dot(g, &x)).collect();
            let upper = !T::zero().lt_tol(&fx) || dots.iter().any(|d| !d.lt_tol(&T::zero()));
            let lower = !fx.lt_tol(&T::zero()) || dots.iter().any(|d| !T::zero().lt_tol(d));
            if !(upper && lower) {
                return Err(Error::Internal(
                    "gauge bound fails at a sample point".into(),
                ));
            }
        }
    }
    Ok(f)
}

/// Extends the affine variety `x0 + span(M)`, disjoint from `B` in both
/// components, to a hyperplane `H = {f = 1}` with `f ≤' q_B`, hence
/// `B ⊆ {f ≤' 1}`.
///
/// `f` is fixed on `N = span(M ∪ {x0})` by `f(m) = 0` and `f(x0) = 1`,
/// which is dominated by `q_B` on `N` because the variety misses `B`, and
/// then extended to the whole space.
pub fn variety_extend_hyperplane<T: Real>(
    x0: &DVector<T>,
    basis_m: &[DVector<T>],
    b: &DConvexSet<T>,
) -> Result<DHyperplane<T>> {
    let n = b.dim();
    check_dim(n, x0.dim())?;
    for m in basis_m {
        check_dim(n, m.dim())?;
    }
    absorbing_or_err(b)?;
    for c in Idem::BOTH {
        let dirs: Vec<Vec<T>> = basis_m.iter().map(|m| m.component(c)).collect();
        if rank_of(&dirs) != dirs.len() {
            return Err(Error::DegenerateBasis(c));
        }
        let base = x0.component(c);
        let mut with_base = dirs.clone();
        with_base.push(base.clone());
        if rank_of(&with_base) == dirs.len() {
            return Err(Error::DegenerateVariety(c));
        }
        if let Some(w) = b.component(c).affine_meet(&base, &dirs, b.open) {
            return Err(Error::NotDisjoint {
                component: c,
                witness: w.iter().map(T::to_string).collect(),
            });
        }
    }
    let mut basis: Vec<DVector<T>> = basis_m.to_vec();
    basis.push(x0.clone());
    let mut values = vec![Hyperbolic::from_real(T::zero()); basis_m.len()];
    values.push(Hyperbolic::from_real(T::one()));
    let f = extend_values(&basis, &values, b, n)?;
    let one = Hyperbolic::from_real(T::one());
    let zero = Hyperbolic::from_real(T::zero());
    if !f.eval(x0)?.approx_eq(&one)
        || basis_m
            .iter()
            .any(|m| f.eval(m).map(|v| !v.approx_eq(&zero)).unwrap_or(true))
    {
        return Err(Error::Internal(
            "extension does not contain the variety".into(),
        ));
    }
    Ok(DHyperplane::new(f, one))
}
