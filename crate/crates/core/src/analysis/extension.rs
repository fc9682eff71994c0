use crate::convex::{unit, DConvexSet, RealPolytope, Repr};
use crate::error::{Error, Result};
use crate::linear::{check_dim, rank_of, real_dot, DLinearFunctional, DVector, Matrix};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::scalar::{Idem, Real};

/// Real gauge of one component polytope, in the form the extension LPs need.
#[derive(Clone, Debug)]
pub(crate) enum ComponentGauge<T> {
    /// `p(v) = min{Σμ : Σ μ_j w_j = v, μ ≥ 0}`
    Vertices(Vec<Vec<T>>),
    /// `p(v) = max(0, max_i r_i·v)` with rows `r_i = a_i / b_i`
    Faces(Vec<Vec<T>>),
}

impl<T: Real> ComponentGauge<T> {
    pub(crate) fn of(p: &RealPolytope<T>, c: Idem) -> Result<Self> {
        let gauge = match p.repr() {
            Repr::Vertices(_) => {
                if !p.is_absorbing() {
                    return Err(Error::NotAbsorbing(c));
                }
                ComponentGauge::Vertices(p.vertices()?)
            }
            Repr::HalfSpaces(faces) => {
                if !p.is_absorbing() {
                    return Err(Error::NotAbsorbing(c));
                }
                ComponentGauge::Faces(
                    faces
                        .iter()
                        .map(|f| f.a.iter().map(|a| a.clone() / f.b.clone()).collect())
                        .collect(),
                )
            }
        };
        Ok(gauge)
    }

    /// `f ≤ p` everywhere, i.e. `f ≤ 1` on the unit-gauge polytope.
    pub(crate) fn dominates(&self, coeffs: &[T]) -> bool {
        match self {
            ComponentGauge::Vertices(ws) => {
                ws.iter().all(|w| real_dot(coeffs, w).le_tol(&T::one()))
            }
            ComponentGauge::Faces(rows) => {
                let mut lp = LinearProgram::maximize(coeffs.to_vec());
                lp.set_free_range(0..coeffs.len());
                for r in rows {
                    lp.add(r.clone(), Relation::Le, T::one());
                }
                matches!(lp.solve(), LpOutcome::Optimal { value, .. } if value.le_tol(&T::one()))
            }
        }
    }

    /// `inf_t p(Σ t_i y_i + z) - Σ t_i g_i`; `None` when unbounded below.
    pub(crate) fn min_shifted(&self, basis: &[Vec<T>], g: &[T], z: &[T]) -> Option<T> {
        let k = basis.len();
        let d = z.len();
        let outcome = match self {
            ComponentGauge::Vertices(ws) => {
                let m = ws.len();
                let mut obj = vec![T::one(); m];
                obj.extend(g.iter().map(|v| -v.clone()));
                let mut lp = LinearProgram::minimize(obj);
                lp.set_free_range(m..m + k);
                for r in 0..d {
                    let mut row: Vec<T> = ws.iter().map(|w| w[r].clone()).collect();
                    row.extend(basis.iter().map(|y| -y[r].clone()));
                    lp.add(row, Relation::Eq, z[r].clone());
                }
                lp.solve()
            }
            ComponentGauge::Faces(rows) => {
                let mut obj = vec![T::one()];
                obj.extend(g.iter().map(|v| -v.clone()));
                let mut lp = LinearProgram::minimize(obj);
                lp.set_free_range(1..k + 1);
                for r in rows {
                    let mut row = vec![T::one()];
                    row.extend(basis.iter().map(|y| -real_dot(r, y)));
                    lp.add(row, Relation::Ge, real_dot(r, z));
                }
                lp.solve()
            }
        };
        match outcome {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// One-dimension-at-a-time dominated extension of a real functional given
/// by its values on a basis of a subspace.
pub(crate) fn extend_component<T: Real>(
    gauge: &ComponentGauge<T>,
    basis: &[Vec<T>],
    values: &[T],
    n: usize,
    c: Idem,
) -> Result<Vec<T>> {
    if rank_of(basis) != basis.len() {
        return Err(Error::DegenerateBasis(c));
    }
    let zero = vec![T::zero(); n];
    match gauge.min_shifted(basis, values, &zero) {
        Some(v) if !v.lt_tol(&T::zero()) => {}
        _ => return Err(Error::Domination(c)),
    }
    let mut cur: Vec<Vec<T>> = basis.to_vec();
    let mut vals: Vec<T> = values.to_vec();
    for k in 0..n {
        if cur.len() == n {
            break;
        }
        let z = unit(n, k, &T::one());
        let mut trial = cur.clone();
        trial.push(z.clone());
        if rank_of(&trial) == cur.len() {
            continue;
        }
        let neg: Vec<T> = z.iter().map(|v| -v.clone()).collect();
        let upper = gauge
            .min_shifted(&cur, &vals, &z)
            .ok_or(Error::Domination(c))?;
        let lower = -gauge
            .min_shifted(&cur, &vals, &neg)
            .ok_or(Error::Domination(c))?;
        if upper.lt_tol(&lower) {
            return Err(Error::Domination(c));
        }
        vals.push((lower + upper).half());
        cur = trial;
    }
    let coeffs = if n == 0 {
        Vec::new()
    } else {
        Matrix::from_rows(&cur)
            .solve(&vals)
            .ok_or_else(|| Error::Internal("extended basis is singular".into()))?
    };
    if !gauge.dominates(&coeffs) {
        return Err(Error::Internal(
            "extension is not dominated by the gauge".into(),
        ));
    }
    Ok(coeffs)
}

/// Extends values prescribed on a basis of a submodule of `D^n` to a
/// `D`-linear functional dominated by the gauge of `q`.
pub(crate) fn extend_values<T: Real>(
    basis: &[DVector<T>],
    values: &[crate::scalar::Hyperbolic<T>],
    q: &DConvexSet<T>,
    n: usize,
) -> Result<DLinearFunctional<T>> {
    check_dim(n, q.dim())?;
    for b in basis {
        check_dim(n, b.dim())?;
    }
    let mut parts = Vec::with_capacity(2);
    for c in Idem::BOTH {
        let gauge = ComponentGauge::of(q.component(c), c)?;
        let basis_c: Vec<Vec<T>> = basis.iter().map(|b| b.component(c)).collect();
        let vals_c: Vec<T> = values.iter().map(|v| v.component(c).clone()).collect();
        parts.push(extend_component(&gauge, &basis_c, &vals_c, n, c)?);
    }
    DLinearFunctional::from_split(&parts[0], &parts[1])
}

/// Dominated extension: given `g` on the submodule spanned by `basis` with
/// `g ≤' q` there, returns a `D`-linear `f` on `D^n` with `f = g` on the
/// submodule and `f(x) ≤' q(x)` for every `x`.
///
/// Each component is extended one coordinate direction at a time. For a new
/// direction `z` the admissible values of `f(z)` form the interval
/// `[sup_y g(y) - q(y - z), inf_y q(y + z) - g(y)]`, both ends computed by
/// an exact LP; the midpoint is taken.
pub fn extend_dominated<T: Real>(
    g: &DLinearFunctional<T>,
    basis: &[DVector<T>],
    q: &DConvexSet<T>,
    n: usize,
) -> Result<DLinearFunctional<T>> {
    check_dim(n, g.dim())?;
    let values = basis
        .iter()
        .map(|b| g.eval(b))
        .collect::<Result<Vec<_>>>()?;
    extend_values(basis, &values, q, n)
}

/// `f ≤' q` everywhere, decided exactly per component.
pub fn is_dominated<T: Real>(f: &DLinearFunctional<T>, q: &DConvexSet<T>) -> Result<bool> {
    check_dim(f.dim(), q.dim())?;
    for c in Idem::BOTH {
        if !ComponentGauge::of(q.component(c), c)?.dominates(&f.component(c)) {
            return Ok(false);
        }
    }
    Ok(true)
}
