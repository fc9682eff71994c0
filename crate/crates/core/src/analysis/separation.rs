use serde::Serialize;

use super::extension::extend_values;
use crate::convex::{centroid, minkowski_diff_translate, DConvexSet};
use crate::error::{Error, Result};
use crate::linear::{
    hyperbolic_part, real_dot, reconstruct, Axis, BCLinearFunctional, DLinearFunctional, DVector,
};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::order::{le, lt_strict};
use crate::scalar::{Hyperbolic, Idem, Real};

/// Which of the two separated sets a checked vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    A,
    B,
}

/// `f` evaluated at one vertex of a set, with the outcome of its comparison
/// against `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Real"))]
pub struct VertexCheck<T> {
    pub vertex: DVector<T>,
    pub side: Side,
    pub value: Hyperbolic<T>,
    /// `f(a) <' γ` for side A, `γ ≤' f(b)` for side B.
    pub holds: bool,
}

/// Intermediate data of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Real"))]
pub struct SeparationTrace<T> {
    pub x0: DVector<T>,
    pub a0: DVector<T>,
    pub b0: DVector<T>,
    /// `G = A - B + x0`.
    pub g: DConvexSet<T>,
    /// `q_G(x0)`, at least 1 in both components for disjoint inputs.
    pub gauge_x0: Hyperbolic<T>,
}

/// A functional and a level with `f(a) <' γ ≤' f(b)`, checkable by
/// evaluation at vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Real"))]
pub struct SeparationCertificate<T> {
    pub f: DLinearFunctional<T>,
    pub gamma: Hyperbolic<T>,
    pub trace: SeparationTrace<T>,
    pub checks: Vec<VertexCheck<T>>,
}

impl<T: Real> SeparationCertificate<T> {
    /// Every recorded check holds.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// Re-evaluates the certificate against the sets from scratch.
    pub fn verify(&self, a: &DConvexSet<T>, b: &DConvexSet<T>) -> Result<bool> {
        let checks = vertex_checks(&self.f, &self.gamma, a, b)?;
        Ok(!checks.is_empty() && checks.iter().all(|c| c.holds))
    }
}

/// Result of separating sets viewed in `BC^n`, realified as `D^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Real"))]
pub struct BicomplexSeparation<T> {
    pub h: BCLinearFunctional<T>,
    pub gamma: Hyperbolic<T>,
    pub certificate: SeparationCertificate<T>,
}

/// All `D`-vertices `e1·v1 + e2·v2` of a set.
fn d_vertices<T: Real>(s: &DConvexSet<T>) -> Result<Vec<DVector<T>>> {
    let (v1, v2) = s.vertices()?;
    let mut out = Vec::with_capacity(v1.len() * v2.len());
    for p in &v1 {
        for q in &v2 {
            out.push(DVector::from_components(p, q)?);
        }
    }
    Ok(out)
}

fn vertex_checks<T: Real>(
    f: &DLinearFunctional<T>,
    gamma: &Hyperbolic<T>,
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
) -> Result<Vec<VertexCheck<T>>> {
    let mut out = Vec::new();
    for (side, set) in [(Side::A, a), (Side::B, b)] {
        for vertex in d_vertices(set)? {
            let value = f.eval(&vertex)?;
            let holds = match side {
                Side::A => lt_strict(&value, gamma),
                Side::B => le(gamma, &value),
            };
            out.push(VertexCheck {
                vertex,
                side,
                value,
                holds,
            });
        }
    }
    Ok(out)
}

/// A point of `P_A ∩ P_B` as deep inside `P_A` as possible.
fn meet_witness<T: Real>(va: &[Vec<T>], vb: &[Vec<T>]) -> Option<Vec<T>> {
    let (m, k) = (va.len(), vb.len());
    let d = va.first()?.len();
    let width = m + k + 1;
    let mut obj = vec![T::zero(); width];
    obj[width - 1] = T::one();
    let mut lp = LinearProgram::maximize(obj);
    lp.set_free(width - 1);
    let mut sum_a = vec![T::zero(); width];
    let mut sum_b = vec![T::zero(); width];
    sum_a[..m].iter_mut().for_each(|v| *v = T::one());
    sum_b[m..m + k].iter_mut().for_each(|v| *v = T::one());
    lp.add(sum_a, Relation::Eq, T::one());
    lp.add(sum_b, Relation::Eq, T::one());
    for r in 0..d {
        let mut row: Vec<T> = va.iter().map(|v| v[r].clone()).collect();
        row.extend(vb.iter().map(|v| -v[r].clone()));
        row.push(T::zero());
        lp.add(row, Relation::Eq, T::zero());
    }
    for j in 0..m {
        let mut row = vec![T::zero(); width];
        row[j] = T::one();
        row[width - 1] = -T::one();
        lp.add(row, Relation::Ge, T::zero());
    }
    let mut cap = vec![T::zero(); width];
    cap[width - 1] = T::one();
    lp.add(cap, Relation::Le, T::one());
    let x = lp.solve().point()?.to_vec();
    Some(
        (0..d)
            .map(|r| {
                va.iter()
                    .zip(&x)
                    .fold(T::zero(), |acc, (v, l)| acc + v[r].clone() * l.clone())
            })
            .collect(),
    )
}

fn not_disjoint<T: Real>(c: Idem, a: &DConvexSet<T>, b: &DConvexSet<T>) -> Error {
    let va = a.component(c).vertices().unwrap_or_default();
    let vb = b.component(c).vertices().unwrap_or_default();
    let witness = meet_witness(&va, &vb).unwrap_or_default();
    Error::NotDisjoint {
        component: c,
        witness: witness.iter().map(|v| v.to_string()).collect(),
    }
}

/// Separates an open `D`-convex set `A` from a `D`-convex set `B` whose
/// idempotent components are disjoint.
///
/// The construction: pick interior points `a0 ∈ A`, `b0 ∈ B`, set
/// `x0 = b0 - a0` and `G = A - B + x0`, an absorbing set with `x0 ∉ G`. The
/// functional `g(λ x0) = λ` on `span{x0}` is extended to `f` dominated by
/// the gauge of `s·G` with `s = q_G(x0)`, so `f(a) - f(b) + 1 ≤' 1/s` and
/// therefore `f(a) ≤' f(b)`, strictly whenever the closures are disjoint.
/// Finally `γ = inf_D f(B)`, attained at a vertex.
pub fn separate_hyperbolic<T: Real>(
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
) -> Result<SeparationCertificate<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    if !a.open || !a.p1.is_full_dimensional() || !a.p2.is_full_dimensional() {
        return Err(Error::NotOpen);
    }
    let n = a.dim();
    let (va1, va2) = a.vertices()?;
    let (vb1, vb2) = b.vertices()?;
    if vb1.is_empty() || vb2.is_empty() {
        return Err(Error::EmptyInput);
    }
    let a0 = DVector::from_components(&centroid(&va1), &centroid(&va2))?;
    let b0 = DVector::from_components(&centroid(&vb1), &centroid(&vb2))?;
    let g = minkowski_diff_translate(a, b, &a0, &b0)?;
    let x0 = &b0 - &a0;
    let mut s = Hyperbolic::from_real(T::one());
    for c in Idem::BOTH {
        let gauge = g
            .component(c)
            .gauge(&x0.component(c))
            .ok_or(Error::NotAbsorbing(c))?;
        if gauge.lt_tol(&T::one()) {
            return Err(not_disjoint(c, a, b));
        }
        match c {
            Idem::E1 => s.e1 = gauge,
            Idem::E2 => s.e2 = gauge,
        }
    }
    let f = extend_values(
        std::slice::from_ref(&x0),
        &[Hyperbolic::from_real(T::one())],
        &g.scaled(&s),
        n,
    )?;
    let images: Vec<Hyperbolic<T>> = d_vertices(b)?
        .iter()
        .map(|v| f.eval(v))
        .collect::<Result<_>>()?;
    let gamma = Hyperbolic::new(
        images
            .iter()
            .map(|h| h.e1.clone())
            .reduce(T::min_of)
            .ok_or(Error::EmptySet)?,
        images
            .iter()
            .map(|h| h.e2.clone())
            .reduce(T::min_of)
            .ok_or(Error::EmptySet)?,
    );
    let checks = vertex_checks(&f, &gamma, a, b)?;
    Ok(SeparationCertificate {
        f,
        gamma,
        trace: SeparationTrace {
            x0,
            a0,
            b0,
            g,
            gauge_x0: s,
        },
        checks,
    })
}

/// Separation in `BC^n`: the sets live in the realification `D^{2n}` with
/// layout `[u; v]` for `x = u + i·v`. The hyperbolic certificate `f` is
/// lifted to `h(x) = f(x) - i f(ix)`, whose hyperbolic part is `f`.
pub fn separate_bicomplex<T: Real>(
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
) -> Result<BicomplexSeparation<T>> {
    if !a.dim().is_multiple_of(2) {
        return Err(Error::Unsupported(
            "realified BC^n sets need an even dimension".into(),
        ));
    }
    let certificate = separate_hyperbolic(a, b)?;
    let h = reconstruct(&certificate.f, Axis::I)?;
    if hyperbolic_part(&h) != certificate.f {
        return Err(Error::Internal(
            "hyperbolic part of the lift differs from f".into(),
        ));
    }
    Ok(BicomplexSeparation {
        h,
        gamma: certificate.gamma.clone(),
        certificate,
    })
}

/// A real separating hyperplane `{x : normal·x = level}` for one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSeparator<T> {
    pub normal: Vec<T>,
    pub level: T,
}

/// Independent LP check: per component, looks for `c, γ` with `c·a ≤ γ` on
/// the vertices of `A`, `c·b ≥ γ` on the vertices of `B` and
/// `c·(b̄ - ā) = 1` for the vertex centroids. With `A` full-dimensional this
/// is feasible exactly when the open set misses `B`.
pub fn lp_separation_oracle<T: Real>(
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
) -> Result<[Option<ComponentSeparator<T>>; 2]> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let d = a.dim();
    let solve = |c: Idem| -> Result<Option<ComponentSeparator<T>>> {
        let va = a.component(c).vertices()?;
        let vb = b.component(c).vertices()?;
        let diff: Vec<T> = centroid(&vb)
            .iter()
            .zip(centroid(&va))
            .map(|(p, q)| p.clone() - q)
            .collect();
        let mut lp = LinearProgram::feasibility(d + 1);
        lp.set_free_range(0..d + 1);
        for v in &va {
            let mut row = v.clone();
            row.push(-T::one());
            lp.add(row, Relation::Le, T::zero());
        }
        for v in &vb {
            let mut row = v.clone();
            row.push(-T::one());
            lp.add(row, Relation::Ge, T::zero());
        }
        let mut norm = diff;
        norm.push(T::zero());
        lp.add(norm, Relation::Eq, T::one());
        Ok(match lp.solve() {
            LpOutcome::Optimal { mut x, .. } => {
                let level = x.pop().expect("level variable");
                debug_assert!(va.iter().all(|v| real_dot(&x, v).le_tol(&level)));
                Some(ComponentSeparator { normal: x, level })
            }
            _ => None,
        })
    };
    Ok([solve(Idem::E1)?, solve(Idem::E2)?])
}

/// The oracle and the construction agree: both succeed, or both report
/// that some component fails to separate.
pub fn oracle_agrees<T: Real>(
    outcome: &Result<SeparationCertificate<T>>,
    oracle: &[Option<ComponentSeparator<T>>; 2],
) -> bool {
    let oracle_ok = oracle.iter().all(Option::is_some);
    match outcome {
        Ok(cert) => oracle_ok && cert.all_hold(),
        Err(Error::NotDisjoint { component, .. }) => oracle[component.index()].is_none(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::RealPolytope;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn point(a: i64, b: i64) -> DConvexSet<Rational> {
        DConvexSet::new(
            RealPolytope::point(vec![q(a)]),
            RealPolytope::point(vec![q(b)]),
            false,
        )
        .unwrap()
    }

    #[test]
    fn one_dimensional_example() {
        let a = DConvexSet::cube(1, &q(1), true);
        let b = point(2, 3);
        let cert = separate_hyperbolic(&a, &b).unwrap();
        assert!(cert.all_hold());
        assert!(cert.verify(&a, &b).unwrap());
        // f = x / (2e1 + 3e2), so γ = f(b) = 1
        assert_eq!(
            cert.f.coeffs.0[0],
            Hyperbolic::new(Rational::from_ratio(1, 2), Rational::from_ratio(1, 3))
        );
        assert_eq!(cert.gamma, Hyperbolic::from_ints(1, 1));
        let rescaled = cert.f.scale(&Hyperbolic::from_ints(2, 3));
        assert_eq!(
            rescaled.eval(&DVector::unit(1, 0)).unwrap(),
            Hyperbolic::from_ints(1, 1)
        );
        assert!(oracle_agrees(
            &Ok(cert),
            &lp_separation_oracle(&a, &b).unwrap()
        ));
    }

    #[test]
    fn overlap_and_closed_input() {
        let a = DConvexSet::cube(1, &q(1), true);
        let b = DConvexSet::new(
            RealPolytope::point(vec![Rational::from_ratio(1, 2)]),
            RealPolytope::point(vec![q(3)]),
            false,
        )
        .unwrap();
        let err = separate_hyperbolic(&a, &b);
        match &err {
            Err(Error::NotDisjoint { component, witness }) => {
                assert_eq!(*component, Idem::E1);
                assert_eq!(witness, &vec!["1/2".to_string()]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(oracle_agrees(&err, &lp_separation_oracle(&a, &b).unwrap()));
        let closed = DConvexSet::cube(1, &q(1), false);
        assert_eq!(
            separate_hyperbolic(&closed, &point(2, 3)),
            Err(Error::NotOpen)
        );
    }

    #[test]
    fn touching_closures_are_still_disjoint() {
        let a = DConvexSet::cube(1, &q(1), true);
        let b = point(1, -1);
        let cert = separate_hyperbolic(&a, &b).unwrap();
        assert_eq!(cert.trace.gauge_x0, Hyperbolic::from_ints(1, 1));
        // the closure vertex touching B sits on the level
        assert!(cert.checks.iter().any(|c| c.side == Side::A && !c.holds));
        assert!(cert
            .checks
            .iter()
            .filter(|c| c.side == Side::B)
            .all(|c| c.holds));
    }

    #[test]
    fn bicomplex_lift() {
        let lo = [q(-1), q(-1)];
        let hi = [q(1), q(1)];
        let a = DConvexSet::boxes(&lo, &hi, &lo, &hi, true).unwrap();
        let b = DConvexSet::new(
            RealPolytope::point(vec![q(3), q(1)]),
            RealPolytope::point(vec![q(0), q(-4)]),
            false,
        )
        .unwrap();
        let sep = separate_bicomplex(&a, &b).unwrap();
        assert_eq!(hyperbolic_part(&sep.h), sep.certificate.f);
        assert_eq!(reconstruct(&sep.certificate.f, Axis::J).unwrap(), sep.h);
        assert!(sep.certificate.all_hold());
    }
}
