use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linear::{real_dot, Matrix};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::scalar::Real;

/// Largest dimension supported by vertex/face conversions.
pub const MAX_CONVERSION_DIM: usize = 3;

/// Half-space `a·x ≤ b`, or `a·x < b` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace<T> {
    pub a: Vec<T>,
    pub b: T,
    pub strict: bool,
}

impl<T: Real> HalfSpace<T> {
    pub fn new(a: Vec<T>, b: T, strict: bool) -> Self {
        Self { a, b, strict }
    }

    pub fn value(&self, x: &[T]) -> T {
        real_dot(&self.a, x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Repr<T> {
    Vertices(Vec<Vec<T>>),
    HalfSpaces(Vec<HalfSpace<T>>),
}

/// Convex polytope in `R^dim` given by vertices or by half-spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealPolytope<T> {
    dim: usize,
    repr: Repr<T>,
}

fn push_unique<T: Real>(list: &mut Vec<Vec<T>>, v: Vec<T>) {
    if !list
        .iter()
        .any(|w| w.iter().zip(&v).all(|(a, b)| a.approx_eq(b)))
    {
        list.push(v);
    }
}

pub(crate) fn unit<T: Real>(dim: usize, k: usize, sign: &T) -> Vec<T> {
    (0..dim)
        .map(|i| if i == k { sign.clone() } else { T::zero() })
        .collect()
}

/// Tries `dim`-element subsets in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl<T: Real> RealPolytope<T> {
    pub fn from_vertices(vertices: Vec<Vec<T>>) -> Result<Self> {
        let dim = vertices.first().ok_or(Error::EmptyInput)?.len();
        for v in &vertices {
            crate::linear::check_dim(dim, v.len())?;
        }
        Ok(Self {
            dim,
            repr: Repr::Vertices(vertices),
        })
    }

    pub fn from_halfspaces(dim: usize, faces: Vec<HalfSpace<T>>) -> Result<Self> {
        for f in &faces {
            crate::linear::check_dim(dim, f.a.len())?;
        }
        Ok(Self {
            dim,
            repr: Repr::HalfSpaces(faces),
        })
    }

    /// Axis-aligned box `[lo, hi]` in half-space form.
    pub fn from_box(lo: &[T], hi: &[T], strict: bool) -> Result<Self> {
        crate::linear::check_dim(lo.len(), hi.len())?;
        let dim = lo.len();
        let mut faces = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            faces.push(HalfSpace::new(
                unit(dim, k, &T::one()),
                hi[k].clone(),
                strict,
            ));
            faces.push(HalfSpace::new(
                unit(dim, k, &-T::one()),
                -lo[k].clone(),
                strict,
            ));
        }
        Self::from_halfspaces(dim, faces)
    }

    /// Axis-aligned box in vertex form.
    pub fn box_vertices(lo: &[T], hi: &[T]) -> Result<Self> {
        crate::linear::check_dim(lo.len(), hi.len())?;
        let dim = lo.len();
        let vertices = (0..1usize << dim)
            .map(|mask| {
                (0..dim)
                    .map(|k| {
                        if mask >> k & 1 == 1 {
                            hi[k].clone()
                        } else {
                            lo[k].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_vertices(vertices)
    }

    pub fn point(p: Vec<T>) -> Self {
        Self {
            dim: p.len(),
            repr: Repr::Vertices(vec![p]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn repr(&self) -> &Repr<T> {
        &self.repr
    }

    pub fn is_vertex_form(&self) -> bool {
        matches!(self.repr, Repr::Vertices(_))
    }

    /// Membership in the closure.
    pub fn contains_closed(&self, x: &[T]) -> bool {
        match &self.repr {
            Repr::HalfSpaces(faces) => faces.iter().all(|f| f.value(x).le_tol(&f.b)),
            Repr::Vertices(vs) => convex_combination(vs, x, false).is_some(),
        }
    }

    /// Membership honoring the strict flags of the faces (vertex form is
    /// always closed).
    pub fn contains(&self, x: &[T]) -> bool {
        match &self.repr {
            Repr::HalfSpaces(faces) => faces.iter().all(|f| {
                if f.strict {
                    f.value(x).lt_tol(&f.b)
                } else {
                    f.value(x).le_tol(&f.b)
                }
            }),
            Repr::Vertices(_) => self.contains_closed(x),
        }
    }

    /// Membership in the topological interior.
    pub fn contains_interior(&self, x: &[T]) -> bool {
        match &self.repr {
            Repr::HalfSpaces(faces) => faces.iter().all(|f| f.value(x).lt_tol(&f.b)),
            Repr::Vertices(vs) => {
                self.is_full_dimensional() && convex_combination(vs, x, true).is_some()
            }
        }
    }

    /// `true` when the polytope has nonempty interior.
    pub fn is_full_dimensional(&self) -> bool {
        match &self.repr {
            Repr::Vertices(vs) => {
                let base = &vs[0];
                let diffs: Vec<Vec<T>> = vs[1..]
                    .iter()
                    .map(|v| {
                        v.iter()
                            .zip(base)
                            .map(|(a, b)| a.clone() - b.clone())
                            .collect()
                    })
                    .collect();
                crate::linear::rank_of(&diffs) == self.dim
            }
            Repr::HalfSpaces(_) => self.interior_point().is_some(),
        }
    }

    /// Some interior point, if the interior is nonempty.
    pub fn interior_point(&self) -> Option<Vec<T>> {
        match &self.repr {
            Repr::Vertices(vs) => {
                if !self.is_full_dimensional() {
                    return None;
                }
                Some(centroid(vs))
            }
            Repr::HalfSpaces(faces) => {
                // max τ  s.t.  a·x + τ ≤ b,  τ ≤ 1,  x free
                let d = self.dim;
                let mut obj = vec![T::zero(); d + 1];
                obj[d] = T::one();
                let mut lp = LinearProgram::maximize(obj);
                lp.set_free_range(0..d + 1);
                for f in faces {
                    let mut row = f.a.clone();
                    row.push(T::one());
                    lp.add(row, Relation::Le, f.b.clone());
                }
                lp.add(unit(d + 1, d, &T::one()), Relation::Le, T::one());
                match lp.solve() {
                    LpOutcome::Optimal { value, mut x } if T::zero().lt_tol(&value) => {
                        x.truncate(d);
                        Some(x)
                    }
                    _ => None,
                }
            }
        }
    }

    /// `sup c·x` over the polytope; `None` when unbounded or empty.
    pub fn maximize(&self, c: &[T]) -> Option<T> {
        self.maximize_point(c).map(|(v, _)| v)
    }

    /// `sup c·x` together with a maximizer.
    pub fn maximize_point(&self, c: &[T]) -> Option<(T, Vec<T>)> {
        match &self.repr {
            Repr::Vertices(vs) => vs
                .iter()
                .map(|v| (real_dot(c, v), v.clone()))
                .reduce(|best, cand| if best.0 < cand.0 { cand } else { best }),
            Repr::HalfSpaces(faces) => {
                let mut lp = LinearProgram::maximize(c.to_vec());
                lp.set_free_range(0..self.dim);
                for f in faces {
                    lp.add(f.a.clone(), Relation::Le, f.b.clone());
                }
                match lp.solve() {
                    LpOutcome::Optimal { value, x } => Some((value, x)),
                    _ => None,
                }
            }
        }
    }

    /// A point of the affine set `base + span(dirs)` inside the polytope (its
    /// interior when `interior`), if any.
    pub fn affine_meet(&self, base: &[T], dirs: &[Vec<T>], interior: bool) -> Option<Vec<T>> {
        let d = self.dim;
        let k = dirs.len();
        match &self.repr {
            Repr::Vertices(vs) => {
                // λ (m), t (k free), τ (free): Σλ = 1, Σλ v - Σ t m = base, λ ≥ τ, τ ≤ 1
                let m = vs.len();
                let width = m + k + 1;
                let mut obj = vec![T::zero(); width];
                obj[width - 1] = T::one();
                let mut lp = LinearProgram::maximize(obj);
                lp.set_free_range(m..width);
                let mut ones = vec![T::zero(); width];
                ones[..m].iter_mut().for_each(|v| *v = T::one());
                lp.add(ones, Relation::Eq, T::one());
                for r in 0..d {
                    let mut row: Vec<T> = vs.iter().map(|v| v[r].clone()).collect();
                    row.extend(dirs.iter().map(|w| -w[r].clone()));
                    row.push(T::zero());
                    lp.add(row, Relation::Eq, base[r].clone());
                }
                for j in 0..m {
                    let mut row = vec![T::zero(); width];
                    row[j] = T::one();
                    row[width - 1] = -T::one();
                    lp.add(row, Relation::Ge, T::zero());
                }
                lp.add(unit(width, width - 1, &T::one()), Relation::Le, T::one());
                match lp.solve() {
                    LpOutcome::Optimal { value, x } => {
                        if interior && !(self.is_full_dimensional() && T::zero().lt_tol(&value)) {
                            return None;
                        }
                        Some(
                            (0..d)
                                .map(|r| {
                                    vs.iter().zip(&x).fold(T::zero(), |acc, (v, l)| {
                                        acc + v[r].clone() * l.clone()
                                    })
                                })
                                .collect(),
                        )
                    }
                    _ => None,
                }
            }
            Repr::HalfSpaces(faces) => {
                // t (k free), τ (free): a·(base + Σ t m) + τ ≤ b, τ ≤ 1
                let width = k + 1;
                let mut obj = vec![T::zero(); width];
                obj[k] = T::one();
                let mut lp = LinearProgram::maximize(obj);
                lp.set_free_range(0..width);
                for f in faces {
                    let mut row: Vec<T> = dirs.iter().map(|w| real_dot(&f.a, w)).collect();
                    row.push(T::one());
                    lp.add(row, Relation::Le, f.b.clone() - f.value(base));
                }
                lp.add(unit(width, k, &T::one()), Relation::Le, T::one());
                match lp.solve() {
                    LpOutcome::Optimal { value, x } => {
                        let ok = if interior {
                            T::zero().lt_tol(&value)
                        } else {
                            !value.lt_tol(&T::zero())
                        };
                        ok.then(|| {
                            (0..d)
                                .map(|r| {
                                    dirs.iter().zip(&x).fold(base[r].clone(), |acc, (w, t)| {
                                        acc + w[r].clone() * t.clone()
                                    })
                                })
                                .collect()
                        })
                    }
                    _ => None,
                }
            }
        }
    }

    /// The dilate `s·P` for `s > 0`.
    pub fn scaled(&self, s: &T) -> Self {
        let repr = match &self.repr {
            Repr::Vertices(vs) => Repr::Vertices(
                vs.iter()
                    .map(|v| v.iter().map(|x| x.clone() * s.clone()).collect())
                    .collect(),
            ),
            Repr::HalfSpaces(fs) => Repr::HalfSpaces(
                fs.iter()
                    .map(|f| HalfSpace::new(f.a.clone(), f.b.clone() * s.clone(), f.strict))
                    .collect(),
            ),
        };
        Self {
            dim: self.dim,
            repr,
        }
    }

    /// `inf c·x` over the polytope; `None` when unbounded or empty.
    pub fn minimize(&self, c: &[T]) -> Option<T> {
        let neg: Vec<T> = c.iter().map(|v| -v.clone()).collect();
        self.maximize(&neg).map(|v| -v)
    }

    /// Bounded and nonempty.
    pub fn is_bounded(&self) -> bool {
        match &self.repr {
            Repr::Vertices(_) => true,
            Repr::HalfSpaces(_) => (0..self.dim).all(|k| {
                [T::one(), -T::one()]
                    .iter()
                    .all(|s| self.maximize(&unit(self.dim, k, s)).is_some())
            }),
        }
    }

    /// Real Minkowski gauge `inf{α > 0 : x ∈ α·P}`; `None` stands for `+∞`.
    pub fn gauge(&self, x: &[T]) -> Option<T> {
        match &self.repr {
            Repr::HalfSpaces(faces) => {
                let mut lower = T::zero();
                let mut upper: Option<T> = None;
                for f in faces {
                    let ax = f.value(x);
                    if T::zero().lt_tol(&f.b) {
                        lower = lower.max_of(ax / f.b.clone());
                    } else if f.b.is_zero_tol() {
                        if T::zero().lt_tol(&ax) {
                            return None;
                        }
                    } else {
                        let u = ax / f.b.clone();
                        upper = Some(match upper {
                            Some(v) => v.min_of(u),
                            None => u,
                        });
                    }
                }
                match upper {
                    Some(u) if !(lower.le_tol(&u) && T::zero().lt_tol(&u)) => None,
                    _ => Some(lower),
                }
            }
            Repr::Vertices(vs) => {
                // min Σμ  s.t.  Σ μ_j v_j = x,  μ ≥ 0
                let mut lp = LinearProgram::minimize(vec![T::one(); vs.len()]);
                for k in 0..self.dim {
                    lp.add(
                        vs.iter().map(|v| v[k].clone()).collect(),
                        Relation::Eq,
                        x[k].clone(),
                    );
                }
                lp.solve().value().cloned()
            }
        }
    }

    /// `0` lies in the interior, equivalently the gauge is finite everywhere.
    pub fn is_absorbing(&self) -> bool {
        match &self.repr {
            Repr::HalfSpaces(faces) => faces.iter().all(|f| T::zero().lt_tol(&f.b)),
            Repr::Vertices(vs) => {
                self.is_full_dimensional()
                    && convex_combination(vs, &vec![T::zero(); self.dim], true).is_some()
            }
        }
    }

    /// Vertex list. Half-space input is enumerated exactly (`dim ≤ 3`).
    pub fn vertices(&self) -> Result<Vec<Vec<T>>> {
        match &self.repr {
            Repr::Vertices(vs) => {
                let mut out = Vec::new();
                for v in vs {
                    push_unique(&mut out, v.clone());
                }
                Ok(out)
            }
            Repr::HalfSpaces(faces) => {
                if self.dim > MAX_CONVERSION_DIM {
                    return Err(Error::Unsupported(format!(
                        "vertex enumeration in dimension {} (at most {MAX_CONVERSION_DIM})",
                        self.dim
                    )));
                }
                if !self.is_bounded() {
                    return Err(Error::Unsupported(
                        "vertex form of an unbounded or empty polytope".into(),
                    ));
                }
                let mut out = Vec::new();
                for subset in subsets(faces.len(), self.dim) {
                    let m = Matrix::from_rows(
                        &subset
                            .iter()
                            .map(|&i| faces[i].a.clone())
                            .collect::<Vec<_>>(),
                    );
                    let rhs: Vec<T> = subset.iter().map(|&i| faces[i].b.clone()).collect();
                    let Some(x) = m.solve(&rhs) else { continue };
                    if self.contains_closed(&x) {
                        push_unique(&mut out, x);
                    }
                }
                if out.is_empty() {
                    return Err(Error::EmptyInput);
                }
                Ok(out)
            }
        }
    }

    /// Vertices that are not convex combinations of the others.
    pub fn extreme_vertices(&self) -> Result<Vec<Vec<T>>> {
        let vs = self.vertices()?;
        if vs.len() <= 1 {
            return Ok(vs);
        }
        // Unique strict maximizers of `v - centroid` are extreme outright.
        let scale = T::from_i64(vs.len() as i64);
        let sum = vs.iter().fold(vec![T::zero(); self.dim], |acc, v| {
            acc.iter()
                .zip(v)
                .map(|(a, b)| a.clone() + b.clone())
                .collect()
        });
        let certified: Vec<bool> = vs
            .iter()
            .map(|v| {
                let dir: Vec<T> = v
                    .iter()
                    .zip(&sum)
                    .map(|(a, s)| a.clone() * scale.clone() - s.clone())
                    .collect();
                let top = T::dot(&dir, v);
                vs.iter()
                    .all(|w| std::ptr::eq(w, v) || T::dot(&dir, w) < top)
            })
            .collect();
        let known: Vec<Vec<T>> = vs
            .iter()
            .zip(&certified)
            .filter(|(_, &c)| c)
            .map(|(v, _)| v.clone())
            .collect();
        Ok((0..vs.len())
            .filter(|&i| {
                if certified[i] {
                    return true;
                }
                if !known.is_empty() && convex_combination(&known, &vs[i], false).is_some() {
                    return false;
                }
                let others: Vec<Vec<T>> = vs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, v)| v.clone())
                    .collect();
                convex_combination(&others, &vs[i], false).is_none()
            })
            .map(|i| vs[i].clone())
            .collect())
    }

    /// Facet list. Vertex input is converted exactly (`dim ≤ 3`,
    /// full-dimensional); the strict flag is applied to every facet.
    pub fn halfspaces(&self, strict: bool) -> Result<Vec<HalfSpace<T>>> {
        match &self.repr {
            Repr::HalfSpaces(faces) => Ok(faces.clone()),
            Repr::Vertices(_) => {
                if self.dim > MAX_CONVERSION_DIM {
                    return Err(Error::Unsupported(format!(
                        "facet enumeration in dimension {} (at most {MAX_CONVERSION_DIM})",
                        self.dim
                    )));
                }
                if !self.is_full_dimensional() {
                    return Err(Error::Unsupported(
                        "facet form of a lower-dimensional polytope".into(),
                    ));
                }
                let vs = self.extreme_vertices()?;
                let d = self.dim;
                let mut out: Vec<HalfSpace<T>> = Vec::new();
                for subset in subsets(vs.len(), d) {
                    let base = &vs[subset[0]];
                    let diffs = Matrix::from_fn(d - 1, d, |r, c| {
                        vs[subset[r + 1]][c].clone() - base[c].clone()
                    });
                    let null = diffs.nullspace();
                    if null.len() != 1 {
                        continue;
                    }
                    let mut a = null.into_iter().next().expect("one null vector");
                    let scale = a
                        .iter()
                        .find(|v| !v.is_zero_tol())
                        .map(|v| num_traits::Signed::abs(v))
                        .expect("nonzero normal");
                    a = a.into_iter().map(|v| v / scale.clone()).collect();
                    let b = real_dot(&a, base);
                    let below = vs.iter().all(|v| real_dot(&a, v).le_tol(&b));
                    let above = vs.iter().all(|v| b.le_tol(&real_dot(&a, v)));
                    let face = match (below, above) {
                        (true, false) => HalfSpace::new(a, b, strict),
                        (false, true) => {
                            HalfSpace::new(a.into_iter().map(|v| -v).collect(), -b, strict)
                        }
                        _ => continue,
                    };
                    let dup = out.iter().any(|f| {
                        f.b.approx_eq(&face.b)
                            && f.a.iter().zip(&face.a).all(|(x, y)| x.approx_eq(y))
                    });
                    if !dup {
                        out.push(face);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Same set in vertex form.
    pub fn to_vertex_form(&self) -> Result<Self> {
        Self::from_vertices(self.vertices()?)
    }

    /// Same set in half-space form.
    pub fn to_halfspace_form(&self, strict: bool) -> Result<Self> {
        Self::from_halfspaces(self.dim, self.halfspaces(strict)?)
    }

    /// Mean of the vertices.
    pub fn vertex_centroid(&self) -> Result<Vec<T>> {
        Ok(centroid(&self.vertices()?))
    }

    pub fn to_f64(&self) -> RealPolytope<f64> {
        let conv = |v: &Vec<T>| v.iter().map(Real::to_f64).collect::<Vec<f64>>();
        let repr = match &self.repr {
            Repr::Vertices(vs) => Repr::Vertices(vs.iter().map(conv).collect()),
            Repr::HalfSpaces(fs) => Repr::HalfSpaces(
                fs.iter()
                    .map(|f| HalfSpace::new(conv(&f.a), f.b.to_f64(), f.strict))
                    .collect(),
            ),
        };
        RealPolytope {
            dim: self.dim,
            repr,
        }
    }
}

pub(crate) fn centroid<T: Real>(vs: &[Vec<T>]) -> Vec<T> {
    let n = T::from_i64(vs.len() as i64);
    (0..vs[0].len())
        .map(|k| vs.iter().fold(T::zero(), |acc, v| acc + v[k].clone()) / n.clone())
        .collect()
}

/// Weights `λ ≥ 0`, `Σλ = 1` with `Σ λ_j v_j = x`. With `positive`, all
/// weights must be strictly positive (relative interior).
pub(crate) fn convex_combination<T: Real>(
    vs: &[Vec<T>],
    x: &[T],
    positive: bool,
) -> Option<Vec<T>> {
    let m = vs.len();
    let d = x.len();
    if !positive {
        let mut lp = LinearProgram::feasibility(m);
        lp.add(vec![T::one(); m], Relation::Eq, T::one());
        for k in 0..d {
            lp.add(
                vs.iter().map(|v| v[k].clone()).collect(),
                Relation::Eq,
                x[k].clone(),
            );
        }
        return lp.solve().point().map(<[T]>::to_vec);
    }
    // λ_j = τ + μ_j with μ ≥ 0; maximize τ
    let mut obj = vec![T::zero(); m + 1];
    obj[m] = T::one();
    let mut lp = LinearProgram::maximize(obj);
    let mut ones = vec![T::one(); m];
    ones.push(T::from_i64(m as i64));
    lp.add(ones, Relation::Eq, T::one());
    for k in 0..d {
        let mut row: Vec<T> = vs.iter().map(|v| v[k].clone()).collect();
        row.push(vs.iter().fold(T::zero(), |acc, v| acc + v[k].clone()));
        lp.add(row, Relation::Eq, x[k].clone());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, x } => {
            if !T::zero().lt_tol(&value) {
                return None;
            }
            Some(x[..m].iter().map(|mu| mu.clone() + value.clone()).collect())
        }
        _ => None,
    }
}

fn vec_to_json<T: Real>(v: &[T]) -> Value {
    Value::Array(v.iter().map(Real::to_json).collect())
}

fn vec_from_json<T: Real>(v: &Value) -> Result<Vec<T>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array of numbers, found {v}")))?
        .iter()
        .map(T::from_json)
        .collect()
}

impl<T: Real> RealPolytope<T> {
    pub fn to_json(&self) -> Value {
        match &self.repr {
            Repr::Vertices(vs) => {
                json!({ "vertices": vs.iter().map(|v| vec_to_json(v)).collect::<Vec<_>>() })
            }
            Repr::HalfSpaces(fs) => json!({
                "dim": self.dim,
                "halfspaces": fs
                    .iter()
                    .map(|f| json!({ "a": vec_to_json(&f.a), "b": f.b.to_json(), "strict": f.strict }))
                    .collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(vs) = v.get("vertices") {
            let vs = vs
                .as_array()
                .ok_or_else(|| Error::Parse("\"vertices\" must be an array".into()))?
                .iter()
                .map(vec_from_json)
                .collect::<Result<Vec<Vec<T>>>>()?;
            return Self::from_vertices(vs);
        }
        if let Some(fs) = v.get("halfspaces") {
            let fs = fs
                .as_array()
                .ok_or_else(|| Error::Parse("\"halfspaces\" must be an array".into()))?
                .iter()
                .map(|f| {
                    let a = vec_from_json(
                        f.get("a")
                            .ok_or_else(|| Error::Parse("half-space missing \"a\"".into()))?,
                    )?;
                    let b = T::from_json(
                        f.get("b")
                            .ok_or_else(|| Error::Parse("half-space missing \"b\"".into()))?,
                    )?;
                    let strict = f.get("strict").and_then(Value::as_bool).unwrap_or(false);
                    Ok(HalfSpace::new(a, b, strict))
                })
                .collect::<Result<Vec<_>>>()?;
            let dim = match v.get("dim").and_then(Value::as_u64) {
                Some(d) => d as usize,
                None => fs
                    .first()
                    .map(|f| f.a.len())
                    .ok_or_else(|| Error::Parse("empty half-space list needs \"dim\"".into()))?,
            };
            return Self::from_halfspaces(dim, fs);
        }
        Err(Error::Parse(
            "polytope needs \"vertices\" or \"halfspaces\"".into(),
        ))
    }
}

impl<T: Real> Serialize for RealPolytope<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, T: Real> Deserialize<'de> for RealPolytope<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn box_round_trip_between_forms() {
        let h = RealPolytope::from_box(&qs(&[-1, -2]), &qs(&[3, 1]), false).unwrap();
        let mut vs = h.vertices().unwrap();
        vs.sort();
        let mut expected = RealPolytope::box_vertices(&qs(&[-1, -2]), &qs(&[3, 1]))
            .unwrap()
            .vertices()
            .unwrap();
        expected.sort();
        assert_eq!(vs, expected);
        let back = RealPolytope::from_vertices(vs)
            .unwrap()
            .halfspaces(false)
            .unwrap();
        assert_eq!(back.len(), 4);
        for x in [qs(&[0, 0]), qs(&[3, 1]), qs(&[4, 0])] {
            let hb = RealPolytope::from_halfspaces(2, back.clone()).unwrap();
            assert_eq!(hb.contains_closed(&x), h.contains_closed(&x));
        }
    }

    #[test]
    fn gauges_agree_between_forms() {
        let v = RealPolytope::from_vertices(vec![qs(&[2, 0]), qs(&[0, 1]), qs(&[-1, -1])]).unwrap();
        let h = v.to_halfspace_form(false).unwrap();
        for x in [qs(&[1, 1]), qs(&[-3, 2]), qs(&[0, 0]), qs(&[5, -4])] {
            assert_eq!(v.gauge(&x), h.gauge(&x));
        }
        assert!(v.is_absorbing() && h.is_absorbing());
    }

    #[test]
    fn interior_and_extremes() {
        let v =
            RealPolytope::from_vertices(vec![qs(&[0, 0]), qs(&[2, 0]), qs(&[0, 2]), qs(&[1, 0])])
                .unwrap();
        assert_eq!(v.extreme_vertices().unwrap().len(), 3);
        assert!(v.contains_interior(&[Rational::from_ratio(1, 2), Rational::from_ratio(1, 2)]));
        assert!(!v.contains_interior(&qs(&[1, 0])));
        assert!(v.contains_closed(&qs(&[1, 0])));
        let seg = RealPolytope::from_vertices(vec![qs(&[0, 0]), qs(&[1, 1])]).unwrap();
        assert!(!seg.is_full_dimensional());
        assert!(seg.halfspaces(false).is_err());
    }

    #[test]
    fn json_forms() {
        let v: RealPolytope<Rational> = serde_json::from_str(r#"{"vertices":[[0],[1]]}"#).unwrap();
        assert_eq!(v.dim(), 1);
        let h: RealPolytope<Rational> =
            serde_json::from_str(r#"{"halfspaces":[{"a":[1],"b":"1/2","strict":true}]}"#).unwrap();
        assert!(h.contains(&[Rational::from_ratio(1, 4)]));
        assert!(!h.contains(&[Rational::from_ratio(1, 2)]));
        assert!(h.contains_closed(&[Rational::from_ratio(1, 2)]));
    }
}
