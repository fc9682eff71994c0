use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::convex::{
    dconvex_hull, is_dabsorbing, is_dconvex, minkowski_diff_translate, minkowski_gauge, DConvexSet,
    RealPolytope, Repr,
};
use crate::linear::DVector;
use crate::order::le;
use crate::sample;
use crate::scalar::{Hyperbolic, Idem, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop(
            "convex.gauge-facets-vs-vertices",
            500,
            gauge_facets_vs_vertices::<T>,
        ),
        prop("convex.gauge-bisection", 500, gauge_bisection::<T>),
        prop("convex.gauge-sublinear", 500, gauge_sublinear::<T>),
        prop("convex.hull", 200, hull::<T>),
        prop(
            "convex.minkowski-difference",
            200,
            minkowski_difference::<T>,
        ),
    ]
}

fn facet_pair<T: Real>(rng: &mut ChaCha8Rng, n: usize) -> DConvexSet<T> {
    let p1 = sample::absorbing_polytope(rng, n, false);
    let p2 = sample::absorbing_polytope(rng, n, false);
    DConvexSet::new(p1, p2, false).expect("same dimension")
}

fn gauge_facets_vs_vertices<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let b = facet_pair::<T>(rng, n);
    let x: DVector<T> = sample::dvector(rng, n);
    let inputs = || json!({"b": b.to_json(), "x": js(&x)});
    let v = DConvexSet::new(
        b.p1.to_vertex_form().expect("small dimension"),
        b.p2.to_vertex_form().expect("small dimension"),
        false,
    )
    .expect("same dimension");
    let closed_form = minkowski_gauge(&b, &x);
    let via_lp = minkowski_gauge(&v, &x);
    ensure(
        matches!((&closed_form, &via_lp), (Ok(p), Ok(q)) if p.approx_eq(q)),
        inputs,
        "facet closed form equals the vertex LP gauge",
        || json!({"facets": format!("{closed_form:?}"), "vertices": format!("{via_lp:?}")}),
    )
}

/// Brute-force gauge of a facet-form polytope: bisection on the scale with
/// raw, tolerance-free membership.
fn bisect_gauge(p: &RealPolytope<f64>, x: &[f64]) -> Option<f64> {
    let Repr::HalfSpaces(faces) = p.repr() else {
        return None;
    };
    let inside = |alpha: f64| {
        faces
            .iter()
            .all(|f| f.a.iter().zip(x).map(|(a, v)| a * v).sum::<f64>() <= alpha * f.b)
    };
    let mut hi = 1.0;
    while !inside(hi) {
        hi *= 2.0;
        if hi > 1e12 {
            return None;
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    Some(hi)
}

fn gauge_bisection<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let b = facet_pair::<T>(rng, n).to_f64();
    let x = sample::dvector::<T, _>(rng, n).to_f64();
    let inputs = || json!({"b": b.to_json(), "x": js(&x)});
    let q = minkowski_gauge(&b, &x);
    for c in Idem::BOTH {
        let brute = bisect_gauge(b.component(c), &x.component(c));
        let closed = q.as_ref().ok().map(|h| *h.component(c));
        let close = matches!((closed, brute), (Some(p), Some(r)) if (p - r).abs() <= 1e-9);
        ensure(
            close,
            inputs,
            "closed-form gauge within 1e-9 of bisection",
            || json!({"component": c.to_string(), "closed": closed, "bisection": brute}),
        )?;
    }
    Ok(())
}

fn gauge_sublinear<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let b = sample::absorbing_set::<T, _>(rng, n, false);
    let (x, y): (DVector<T>, DVector<T>) = (sample::dvector(rng, n), sample::dvector(rng, n));
    let alpha: Hyperbolic<T> = sample::positive_hyperbolic(rng);
    let inputs = || json!({"b": b.to_json(), "x": js(&x), "y": js(&y), "alpha": js(&alpha)});
    let q = |v: &DVector<T>| minkowski_gauge(&b, v).expect("absorbing");
    let (qx, qy, qxy) = (q(&x), q(&y), q(&(&x + &y)));
    ensure(
        le(&qxy, &(&qx + &qy)),
        inputs,
        "q(x + y) ≤' q(x) + q(y)",
        || json!({"q(x)": js(&qx), "q(y)": js(&qy), "q(x+y)": js(&qxy)}),
    )?;
    let scaled = q(&x.scale(&alpha));
    let expected = &alpha * &qx;
    ensure(
        scaled.approx_eq(&expected),
        inputs,
        "q(αx) = α·q(x) for α >' 0",
        || js(&scaled),
    )?;
    let zero = q(&DVector::zeros(n));
    ensure(
        zero.is_zero_tol() && qx.is_nonnegative(),
        inputs,
        "q(0) = 0 ≤' q(x)",
        || js(&zero),
    )
}

fn hull<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=2);
    let k = rng.gen_range(2..=3);
    let pts: Vec<DVector<T>> = (0..k).map(|_| sample::dvector(rng, n)).collect();
    let inputs = || json!({"points": js(&pts)});
    let h = dconvex_hull(&pts).expect("nonempty");
    let mixed = |x: &DVector<T>, y: &DVector<T>| {
        DVector::from_components(&x.component(Idem::E1), &y.component(Idem::E2))
            .expect("same dimension")
    };
    for x in &pts {
        for y in &pts {
            let m = mixed(x, y);
            ensure(
                h.contains_closure(&m),
                inputs,
                "hull contains every mixed point e1·x + e2·y",
                || js(&m),
            )?;
        }
    }
    let product: Vec<DVector<T>> = pts
        .iter()
        .flat_map(|x| pts.iter().map(|y| mixed(x, y)))
        .collect();
    ensure(
        is_dconvex(&product),
        inputs,
        "the product of component sets is D-convex",
        || json!(false),
    )?;
    let (x, y) = (&pts[0], &pts[1]);
    let differs = |c: Idem| x.component(c) != y.component(c);
    if differs(Idem::E1) && differs(Idem::E2) {
        ensure(
            !is_dconvex(&[x.clone(), y.clone()]),
            inputs,
            "a pair differing in both components is not D-convex",
            || json!(true),
        )?;
    }
    Ok(())
}

fn minkowski_difference<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=2);
    let a = sample::absorbing_set::<T, _>(rng, n, false);
    let b = sample::absorbing_set::<T, _>(rng, n, false);
    let shift: DVector<T> = sample::dvector(rng, n);
    let b = DConvexSet::new(
        translate(&b.p1, &shift.component(Idem::E1)),
        translate(&b.p2, &shift.component(Idem::E2)),
        false,
    )
    .expect("same dimension");
    let inputs = || json!({"a": a.to_json(), "b": b.to_json()});
    let (a0, b0) = (
        a.centroid().expect("small dimension"),
        b.centroid().expect("small dimension"),
    );
    let g = match minkowski_diff_translate(&a, &b, &a0, &b0) {
        Ok(g) => g,
        Err(e) => {
            return ensure(false, inputs, "difference of nonempty sets", || {
                json!(e.to_string())
            })
        }
    };
    ensure(
        is_dabsorbing(&g),
        inputs,
        "A - B + x0 absorbs around 0",
        || g.to_json(),
    )?;
    let x0 = &b0 - &a0;
    let (va, vb) = (
        a.vertices().expect("small dimension"),
        b.vertices().expect("small dimension"),
    );
    for _ in 0..3 {
        let pick =
            |vs: &Vec<Vec<T>>, rng: &mut ChaCha8Rng| vs.choose(rng).expect("nonempty").clone();
        let (a1, a2) = (pick(&va.0, rng), pick(&va.1, rng));
        let (b1, b2) = (pick(&vb.0, rng), pick(&vb.1, rng));
        let av = DVector::from_components(&a1, &a2).expect("same dimension");
        let bv = DVector::from_components(&b1, &b2).expect("same dimension");
        let p = &(&av - &bv) + &x0;
        ensure(
            g.contains_closure(&p),
            inputs,
            "a - b + x0 lies in G",
            || js(&p),
        )?;
    }
    Ok(())
}

fn translate<T: Real>(p: &RealPolytope<T>, by: &[T]) -> RealPolytope<T> {
    let vs = p.vertices().expect("small dimension");
    RealPolytope::from_vertices(
        vs.into_iter()
            .map(|v| {
                v.iter()
                    .zip(by)
                    .map(|(x, s)| x.clone() + s.clone())
                    .collect()
            })
            .collect(),
    )
    .expect("nonempty")
}
