use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{
    check_dim, least_norm_preimage, operator_dnorm, singular_values, BCLinearMap, BCVector, Matrix,
};
use crate::scalar::{Hyperbolic, Idem, Real};

/// Singular values at or below this are treated as zero.
pub const SIGMA_TOL: f64 = 1e-12;

/// `delta` component used when the family's bound vanishes in a component.
pub const UNBOUNDED_DELTA: f64 = 1e12;

/// Finite family of maps sharing domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFamily<T> {
    maps: Vec<BCLinearMap<T>>,
}

impl<T: Real> MapFamily<T> {
    pub fn new(maps: Vec<BCLinearMap<T>>) -> Result<Self> {
        if let Some(first) = maps.first() {
            for m in &maps {
                check_dim(first.nrows(), m.nrows())?;
                check_dim(first.ncols(), m.ncols())?;
            }
        }
        Ok(Self { maps })
    }

    pub fn maps(&self) -> &[BCLinearMap<T>] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Uniform bound `M` of a family and the radius `delta = eps / M`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UbpBound {
    pub m: Hyperbolic<f64>,
    pub delta: Hyperbolic<f64>,
}

/// Radius of a ball around the origin contained in the image of the open
/// unit ball.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OpenMapBound {
    pub delta: Hyperbolic<f64>,
}

/// Inverse of a bijective map with its continuity bound.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseMap<T> {
    pub inverse: BCLinearMap<T>,
    pub bound: Hyperbolic<f64>,
}

/// `M = sup_D ‖T_α‖` over the family and `delta = eps / M`, so that
/// `‖x‖ <' delta` forces `‖T_α x‖ <' eps` for every member.
pub fn ubp_bound<T: Real>(family: &MapFamily<T>, eps: &Hyperbolic<f64>) -> Result<UbpBound> {
    if !(eps.e1 > 0.0 && eps.e2 > 0.0) {
        return Err(Error::NonPositiveBound);
    }
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let norms: Vec<Hyperbolic<f64>> = family.maps.iter().map(operator_dnorm).collect();
    let m = Hyperbolic::new(
        norms.iter().map(|h| h.e1).fold(0.0, f64::max),
        norms.iter().map(|h| h.e2).fold(0.0, f64::max),
    );
    let ratio = |e: f64, b: f64| {
        if b <= SIGMA_TOL {
            UNBOUNDED_DELTA
        } else {
            e / b
        }
    };
    let delta = Hyperbolic::new(ratio(eps.e1, m.e1), ratio(eps.e2, m.e2));
    Ok(UbpBound { m, delta })
}

/// Exact row rank of one component of `t`.
fn component_rank<T: Real>(t: &BCLinearMap<T>, c: Idem) -> usize {
    t.component(c).rank()
}

/// `delta = e1·σ_min(T1) + e2·σ_min(T2)` for a map onto its codomain; the
/// image of the open unit ball then contains the open ball of radius
/// `delta`.
pub fn omt_delta<T: Real>(t: &BCLinearMap<T>) -> Result<OpenMapBound> {
    let mut delta = [0.0; 2];
    for c in Idem::BOTH {
        if t.nrows() == 0 || component_rank(t, c) != t.nrows() {
            return Err(Error::NotSurjective(c));
        }
        let sv = singular_values(&t.component(c));
        let smallest = sv.get(t.nrows() - 1).copied().unwrap_or(0.0);
        if smallest <= SIGMA_TOL {
            return Err(Error::NotSurjective(c));
        }
        delta[c.index()] = smallest;
    }
    Ok(OpenMapBound {
        delta: Hyperbolic::new(delta[0], delta[1]),
    })
}

/// Minimum-norm `x` with `T x = y`, per idempotent component.
pub fn omt_preimage<T: Real>(t: &BCLinearMap<T>, y: &BCVector<f64>) -> Result<BCVector<f64>> {
    check_dim(t.nrows(), y.dim())?;
    let mut parts: Vec<Vec<Complex<f64>>> = Vec::with_capacity(2);
    for c in Idem::BOTH {
        parts.push(
            least_norm_preimage(&t.component(c), &y.component(c)).ok_or(Error::NotSurjective(c))?,
        );
    }
    BCVector::from_components(&parts[0], &parts[1])
}

/// Exact inverse of a square map, with `operator_dnorm` of the inverse as
/// its continuity bound.
pub fn inverse_map<T: Real>(t: &BCLinearMap<T>) -> Result<InverseMap<T>> {
    check_dim(t.nrows(), t.ncols())?;
    let mut parts = Vec::with_capacity(2);
    for c in Idem::BOTH {
        let comp = t.component(c);
        let inv = if comp.rows() == 0 {
            Some(comp)
        } else {
            comp.inverse()
        };
        parts.push(inv.ok_or(Error::NotBijective(c))?);
    }
    let inverse = BCLinearMap::from_components(&parts[0], &parts[1])?;
    let bound = operator_dnorm(&inverse);
    Ok(InverseMap { inverse, bound })
}

/// Recovers `T: BC^n → BC^m` from a basis of its graph `{(x, T x)}`.
///
/// Per component the basis rows `[u | v]` must have rank `n` both in the
/// first block and overall. Row reduction then yields `[I | Tᵀ]`.
pub fn map_from_graph<T: Real>(basis: &[BCVector<T>], n: usize) -> Result<BCLinearMap<T>> {
    let Some(total) = basis.first().map(BCVector::dim) else {
        return Err(Error::NotAGraph(Idem::E1));
    };
    if total <= n {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: total,
        });
    }
    for b in basis {
        check_dim(total, b.dim())?;
    }
    let m = total - n;
    let mut parts: Vec<Matrix<Complex<T>>> = Vec::with_capacity(2);
    for c in Idem::BOTH {
        let rows: Vec<Vec<Complex<T>>> = basis.iter().map(|b| b.component(c)).collect();
        let full = Matrix::from_rows(&rows);
        let left = Matrix::from_fn(rows.len(), n, |r, k| rows[r][k].clone());
        if rows.is_empty() || left.rank() != n || full.rank() != n {
            return Err(Error::NotAGraph(c));
        }
        let (red, _) = full.rref();
        parts.push(Matrix::from_fn(m, n, |r, k| red[(k, n + r)].clone()));
    }
    let t = BCLinearMap::from_components(&parts[0], &parts[1])?;
    for b in basis {
        let u = BCVector(b.0[..n].to_vec());
        let v = BCVector(b.0[n..].to_vec());
        if !t.apply(&u)?.approx_eq(&v) {
            return Err(Error::Internal(
                "reconstructed map disagrees with the graph".into(),
            ));
        }
    }
    Ok(t)
}
