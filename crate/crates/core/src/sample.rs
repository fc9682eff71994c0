//! Seeded random instances for property checks: scalars, vectors,
//! functionals, absorbing polytopes, separable set pairs, maps, graph bases
//! and rectangle covers. All values are small rationals so both backends see
//! the same inputs.

use num_complex::Complex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex::{DConvexSet, HalfSpace, RealPolytope};
use crate::linear::{
    real_dot, BCLinearFunctional, BCLinearMap, BCVector, DLinearFunctional, DVector, Matrix,
};
use crate::metric::RectSet;
use crate::scalar::{Bicomplex, Hyperbolic, Real};

/// Deterministic generator for case `case` of property `property`.
pub fn case_rng(seed: u64, property: &str, case: u64) -> ChaCha8Rng {
    // FNV-1a keeps property streams independent of their order.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in property.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(case);
    rng
}

/// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 6`.
pub fn rational<T: Real, R: Rng>(rng: &mut R) -> T {
    T::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

/// Nonzero variant of [`rational`].
pub fn nonzero_rational<T: Real, R: Rng>(rng: &mut R) -> T {
    let p = loop {
        let p: i64 = rng.gen_range(-9..=9);
        if p != 0 {
            break p;
        }
    };
    T::from_ratio(p, rng.gen_range(1..=6))
}

/// Strictly positive rational in `(0, 3]`.
pub fn positive_rational<T: Real, R: Rng>(rng: &mut R) -> T {
    T::from_ratio(rng.gen_range(1..=12), rng.gen_range(1..=4))
}

pub fn integer<T: Real, R: Rng>(rng: &mut R, lo: i64, hi: i64) -> T {
    T::from_i64(rng.gen_range(lo..=hi))
}

pub fn complex<T: Real, R: Rng>(rng: &mut R) -> Complex<T> {
    Complex::new(rational(rng), rational(rng))
}

pub fn nonzero_complex<T: Real, R: Rng>(rng: &mut R) -> Complex<T> {
    if rng.gen_bool(0.5) {
        Complex::new(nonzero_rational(rng), rational(rng))
    } else {
        Complex::new(rational(rng), nonzero_rational(rng))
    }
}

pub fn hyperbolic<T: Real, R: Rng>(rng: &mut R) -> Hyperbolic<T> {
    Hyperbolic::new(rational(rng), rational(rng))
}

pub fn invertible_hyperbolic<T: Real, R: Rng>(rng: &mut R) -> Hyperbolic<T> {
    Hyperbolic::new(nonzero_rational(rng), nonzero_rational(rng))
}

pub fn positive_hyperbolic<T: Real, R: Rng>(rng: &mut R) -> Hyperbolic<T> {
    Hyperbolic::new(positive_rational(rng), positive_rational(rng))
}

/// Zero divisor: exactly one idempotent component vanishes.
pub fn zero_divisor_hyperbolic<T: Real, R: Rng>(rng: &mut R) -> Hyperbolic<T> {
    let v: T = nonzero_rational(rng);
    if rng.gen_bool(0.5) {
        Hyperbolic::new(v, T::zero())
    } else {
        Hyperbolic::new(T::zero(), v)
    }
}

/// Random bicomplex number; with small probability on the null cone or zero.
pub fn bicomplex<T: Real, R: Rng>(rng: &mut R) -> Bicomplex<T> {
    match rng.gen_range(0..20) {
        0 => Bicomplex::new(Complex::new(T::zero(), T::zero()), complex(rng)),
        1 => Bicomplex::new(complex(rng), Complex::new(T::zero(), T::zero())),
        _ => Bicomplex::new(complex(rng), complex(rng)),
    }
}

pub fn invertible_bicomplex<T: Real, R: Rng>(rng: &mut R) -> Bicomplex<T> {
    Bicomplex::new(nonzero_complex(rng), nonzero_complex(rng))
}

pub fn dvector<T: Real, R: Rng>(rng: &mut R, n: usize) -> DVector<T> {
    DVector((0..n).map(|_| hyperbolic(rng)).collect())
}

pub fn bcvector<T: Real, R: Rng>(rng: &mut R, n: usize) -> BCVector<T> {
    BCVector(
        (0..n)
            .map(|_| Bicomplex::new(complex(rng), complex(rng)))
            .collect(),
    )
}

pub fn d_functional<T: Real, R: Rng>(rng: &mut R, n: usize) -> DLinearFunctional<T> {
    DLinearFunctional::new(dvector(rng, n))
}

/// Functional whose two component coefficient vectors are both nonzero.
pub fn nondegenerate_d_functional<T: Real, R: Rng>(rng: &mut R, n: usize) -> DLinearFunctional<T> {
    loop {
        let f = d_functional(rng, n);
        if f.takes_invertible_value() {
            return f;
        }
    }
}

pub fn bc_functional<T: Real, R: Rng>(rng: &mut R, n: usize) -> BCLinearFunctional<T> {
    BCLinearFunctional::new(bcvector(rng, n))
}

fn real_vec<T: Real, R: Rng>(rng: &mut R, d: usize) -> Vec<T> {
    (0..d).map(|_| rational(rng)).collect()
}

/// Bounded polytope with the origin in its interior, in vertex form (a
/// jittered cross-polytope plus extra points) or half-space form (a box
/// with extra cutting faces at positive offsets).
pub fn absorbing_polytope<T: Real, R: Rng>(
    rng: &mut R,
    d: usize,
    vertex_form: bool,
) -> RealPolytope<T> {
    if vertex_form {
        loop {
            let p = jittered_cross::<T, _>(rng, d);
            if p.is_absorbing() {
                return p;
            }
        }
    }
    let mut faces = Vec::new();
    for k in 0..d {
        for sign in [1, -1] {
            let a = (0..d)
                .map(|i| if i == k { T::from_i64(sign) } else { T::zero() })
                .collect();
            faces.push(HalfSpace::new(
                a,
                positive_rational::<T, _>(rng) + T::from_ratio(1, 2),
                false,
            ));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let a: Vec<T> = real_vec(rng, d);
        if a.iter().any(|v| !v.is_zero_tol()) {
            faces.push(HalfSpace::new(a, positive_rational(rng), false));
        }
    }
    RealPolytope::from_halfspaces(d, faces).expect("consistent dimension")
}

fn jittered_cross<T: Real, R: Rng>(rng: &mut R, d: usize) -> RealPolytope<T> {
    let mut vs = Vec::new();
    for k in 0..d {
        for sign in [1, -1] {
            let mut v: Vec<T> = (0..d)
                .map(|_| T::from_ratio(rng.gen_range(-1..=1), 4))
                .collect();
            v[k] = T::from_i64(sign) * positive_rational::<T, _>(rng) + T::from_ratio(sign, 2);
            vs.push(v);
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        vs.push(real_vec(rng, d));
    }
    RealPolytope::from_vertices(vs).expect("nonempty")
}

fn with_strict_faces<T: Real>(p: RealPolytope<T>, strict: bool) -> RealPolytope<T> {
    match p.repr() {
        crate::convex::Repr::HalfSpaces(faces) => RealPolytope::from_halfspaces(
            p.dim(),
            faces
                .iter()
                .map(|f| HalfSpace::new(f.a.clone(), f.b.clone(), strict))
                .collect(),
        )
        .expect("same dimension"),
        _ => p,
    }
}

/// Absorbing `D`-convex set in `D^n`; each component independently in
/// vertex or half-space form.
pub fn absorbing_set<T: Real, R: Rng>(rng: &mut R, n: usize, open: bool) -> DConvexSet<T> {
    let (form1, form2) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
    let p1 = with_strict_faces(absorbing_polytope(rng, n, form1), open);
    let p2 = with_strict_faces(absorbing_polytope(rng, n, form2), open);
    DConvexSet::new(p1, p2, open).expect("same dimension")
}

/// Full-dimensional polytope around a random center.
fn body<T: Real, R: Rng>(rng: &mut R, d: usize) -> RealPolytope<T> {
    let center: Vec<T> = (0..d).map(|_| integer(rng, -3, 3)).collect();
    let shifted = |p: RealPolytope<T>| -> RealPolytope<T> {
        let vs = p.vertices().expect("small dimension");
        RealPolytope::from_vertices(
            vs.into_iter()
                .map(|v| {
                    v.iter()
                        .zip(&center)
                        .map(|(a, c)| a.clone() + c.clone())
                        .collect()
                })
                .collect(),
        )
        .expect("nonempty")
    };
    if rng.gen_bool(0.5) {
        let lo: Vec<T> = center
            .iter()
            .map(|c| c.clone() - positive_rational::<T, _>(rng))
            .collect();
        let hi: Vec<T> = center
            .iter()
            .map(|c| c.clone() + positive_rational::<T, _>(rng))
            .collect();
        RealPolytope::from_box(&lo, &hi, false).expect("same dimension")
    } else {
        shifted(absorbing_polytope(rng, d, true))
    }
}

fn scatter<T: Real, R: Rng>(rng: &mut R, d: usize) -> Vec<Vec<T>> {
    let center: Vec<T> = (0..d).map(|_| integer(rng, -3, 3)).collect();
    (0..rng.gen_range(1..=4))
        .map(|_| {
            center
                .iter()
                .map(|c| c.clone() + rational::<T, _>(rng) / T::from_i64(2))
                .collect()
        })
        .collect()
}

fn nonzero_direction<T: Real, R: Rng>(rng: &mut R, d: usize) -> Vec<T> {
    loop {
        let u: Vec<T> = (0..d).map(|_| integer(rng, -2, 2)).collect();
        if u.iter().any(|v| !v.is_zero_tol()) {
            return u;
        }
    }
}

/// Vertices of a point set pushed along `u` until `min u·b ≥ level + gap`.
fn push_past<T: Real>(points: Vec<Vec<T>>, u: &[T], level: T, gap: T) -> Vec<Vec<T>> {
    let lowest = points
        .iter()
        .map(|p| real_dot(u, p))
        .reduce(T::min_of)
        .expect("nonempty");
    let t = (level + gap - lowest) / real_dot(u, u);
    points
        .into_iter()
        .map(|p| {
            p.iter()
                .zip(u)
                .map(|(x, ui)| x.clone() + t.clone() * ui.clone())
                .collect()
        })
        .collect()
}

fn as_open<T: Real>(p: RealPolytope<T>) -> RealPolytope<T> {
    with_strict_faces(p, true)
}

/// Open `A` and closed `B` in `D^n` whose closures are disjoint in both
/// components, separated along random directions with a positive gap.
pub fn separable_pair<T: Real, R: Rng>(rng: &mut R, n: usize) -> (DConvexSet<T>, DConvexSet<T>) {
    let mut comps_a = Vec::new();
    let mut comps_b = Vec::new();
    for _ in 0..2 {
        let a = body::<T, _>(rng, n);
        let u = nonzero_direction::<T, _>(rng, n);
        let top = a.maximize(&u).expect("bounded body");
        let gap = T::from_ratio(rng.gen_range(1..=8), 4);
        comps_b.push(
            RealPolytope::from_vertices(push_past(scatter(rng, n), &u, top, gap))
                .expect("nonempty"),
        );
        comps_a.push(as_open(a));
    }
    let b2 = comps_b.pop().expect("two components");
    let b1 = comps_b.pop().expect("two components");
    let a2 = comps_a.pop().expect("two components");
    let a1 = comps_a.pop().expect("two components");
    (
        DConvexSet::new(a1, a2, true).expect("same dimension"),
        DConvexSet::new(b1, b2, false).expect("same dimension"),
    )
}

/// Pair where one component of `B` reaches into the interior of `A`.
pub fn overlapping_pair<T: Real, R: Rng>(rng: &mut R, n: usize) -> (DConvexSet<T>, DConvexSet<T>) {
    let (a, mut b) = separable_pair::<T, _>(rng, n);
    let inside = |p: &RealPolytope<T>| {
        let vs = p.vertices().expect("small dimension");
        crate::convex::centroid(&vs)
    };
    let (target, source) = if rng.gen_bool(0.5) {
        (&mut b.p1, &a.p1)
    } else {
        (&mut b.p2, &a.p2)
    };
    let mut vs = target.vertices().expect("vertex form");
    vs.push(inside(source));
    *target = RealPolytope::from_vertices(vs).expect("nonempty");
    (a, b)
}

fn complex_matrix<T: Real, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<Complex<T>> {
    let entries: Vec<Vec<Complex<T>>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| Complex::new(integer(rng, -3, 3), integer(rng, -3, 3)))
                .collect()
        })
        .collect();
    Matrix::from_fn(rows, cols, |r, c| entries[r][c].clone())
}

/// Random `m × n` map with small Gaussian-integer entries.
pub fn map<T: Real, R: Rng>(rng: &mut R, m: usize, n: usize) -> BCLinearMap<T> {
    let t1 = complex_matrix(rng, m, n);
    let t2 = complex_matrix(rng, m, n);
    BCLinearMap::from_components(&t1, &t2).expect("same shape")
}

/// Square map invertible in both components.
pub fn invertible_map<T: Real, R: Rng>(rng: &mut R, n: usize) -> BCLinearMap<T> {
    let mut comp = || loop {
        let m = complex_matrix::<T, _>(rng, n, n);
        if m.rank() == n {
            return m;
        }
    };
    let t1 = comp();
    let t2 = comp();
    BCLinearMap::from_components(&t1, &t2).expect("same shape")
}

/// A map `T: BC^n → BC^m` and a mixed basis of its graph.
pub fn graph_basis<T: Real, R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
) -> (BCLinearMap<T>, Vec<BCVector<T>>) {
    let t = map::<T, _>(rng, m, n);
    let mix = invertible_map::<T, _>(rng, n);
    let pairs: Vec<BCVector<T>> = (0..n)
        .map(|k| {
            let e = BCVector::unit(n, k);
            let mut v = e.0.clone();
            v.extend(t.apply(&e).expect("dimensions agree").0);
            BCVector(v)
        })
        .collect();
    let basis = (0..n)
        .map(|j| {
            let mut acc = BCVector::zeros(n + m);
            for (k, p) in pairs.iter().enumerate() {
                acc = &acc + &p.scale(mix.entry(j, k));
            }
            acc
        })
        .collect();
    (t, basis)
}

/// Spanning set of a submodule of `BC^n × BC^m` that is not a graph over
/// `BC^n`: either too few vectors or a first block of deficient rank in one
/// component.
pub fn non_graph_basis<T: Real, R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<BCVector<T>> {
    let (_, mut basis) = graph_basis::<T, _>(rng, n, m);
    if rng.gen_bool(0.3) {
        basis.pop();
        return basis;
    }
    let first_comp = rng.gen_bool(0.5);
    let j = rng.gen_range(0..n);
    for k in 0..n {
        let z = Complex::new(T::zero(), T::zero());
        if first_comp {
            basis[j].0[k].z1 = z;
        } else {
            basis[j].0[k].z2 = z;
        }
    }
    let w = Bicomplex::new(nonzero_complex(rng), nonzero_complex(rng));
    let slot = n + rng.gen_range(0..m);
    if first_comp {
        basis[j].0[slot].z1 = w.z1;
    } else {
        basis[j].0[slot].z2 = w.z2;
    }
    basis
}

fn cuts<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Vec<i64> {
    let mut inner: Vec<i64> = (lo + 1..hi).filter(|_| rng.gen_bool(0.4)).collect();
    inner.insert(0, lo);
    inner.push(hi);
    inner
}

fn grid_cells<T: Real, R: Rng>(rng: &mut R) -> (RectSet<T>, Vec<RectSet<T>>) {
    let (lo1, lo2) = (rng.gen_range(-4..=0), rng.gen_range(-4..=0));
    let (hi1, hi2) = (lo1 + rng.gen_range(2..=6), lo2 + rng.gen_range(2..=6));
    let bbox = RectSet::new(
        (T::from_i64(lo1), T::from_i64(hi1)),
        (T::from_i64(lo2), T::from_i64(hi2)),
    )
    .expect("ordered");
    let xs = cuts(rng, lo1, hi1);
    let ys = cuts(rng, lo2, hi2);
    let mut cells = Vec::new();
    for w in xs.windows(2) {
        for v in ys.windows(2) {
            cells.push(
                RectSet::new(
                    (T::from_i64(w[0]), T::from_i64(w[1])),
                    (T::from_i64(v[0]), T::from_i64(v[1])),
                )
                .expect("ordered"),
            );
        }
    }
    (bbox, cells)
}

/// Finite closed cover of a bounding box: grid cells, some enlarged to
/// overlap, plus decoy rectangles, in random order.
pub fn rect_cover<T: Real, R: Rng>(rng: &mut R) -> (RectSet<T>, Vec<RectSet<T>>) {
    let (bbox, cells) = grid_cells::<T, _>(rng);
    let quarter = T::from_ratio(1, 4);
    let mut cover: Vec<RectSet<T>> = cells
        .into_iter()
        .map(|c| {
            if rng.gen_bool(0.3) {
                let grow = |lo: &T, hi: &T, blo: &T, bhi: &T| {
                    (
                        (lo.clone() - quarter.clone()).max_of(blo.clone()),
                        (hi.clone() + quarter.clone()).min_of(bhi.clone()),
                    )
                };
                RectSet::new(
                    grow(&c.c1.0, &c.c1.1, &bbox.c1.0, &bbox.c1.1),
                    grow(&c.c2.0, &c.c2.1, &bbox.c2.0, &bbox.c2.1),
                )
                .expect("ordered")
            } else {
                c
            }
        })
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        let x: T = bbox.c1.0.clone() + T::from_ratio(rng.gen_range(0..=8), 4);
        let y: T = bbox.c2.0.clone() + T::from_ratio(rng.gen_range(0..=8), 4);
        cover.push(RectSet::new((x.clone(), x), (y.clone(), y)).expect("degenerate but ordered"));
    }
    cover.shuffle(rng);
    (bbox, cover)
}

/// Grid cells of a box with one cell removed, so its interior is uncovered.
pub fn punctured_cover<T: Real, R: Rng>(rng: &mut R) -> (RectSet<T>, Vec<RectSet<T>>) {
    let (bbox, mut cells) = grid_cells::<T, _>(rng);
    let hole = rng.gen_range(0..cells.len());
    cells.remove(hole);
    cells.shuffle(rng);
    (bbox, cells)
}
