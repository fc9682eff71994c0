use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::error::Error;
use crate::linear::DVector;
use crate::metric::{baire_witness, dmetric_sq, metric_triangle_holds, DBall};
use crate::sample;
use crate::scalar::{Hyperbolic, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("metric.axioms", 2_000, axioms::<T>),
        prop("metric.invariance", 2_000, invariance::<T>),
        prop("metric.ball-membership", 2_000, ball_membership::<T>),
        prop("metric.baire-cover", 50, baire_cover::<T>),
        prop("metric.baire-punctured", 50, baire_punctured::<T>),
    ]
}

fn points<T: Real>(rng: &mut ChaCha8Rng) -> (DVector<T>, DVector<T>, DVector<T>) {
    let n = rng.gen_range(1..=4);
    (
        sample::dvector(rng, n),
        sample::dvector(rng, n),
        sample::dvector(rng, n),
    )
}

fn axioms<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (x, y, z) = points::<T>(rng);
    let inputs = || json!({"x": js(&x), "y": js(&y), "z": js(&z)});
    let dxy = dmetric_sq(&x, &y).expect("same dimension");
    let dyx = dmetric_sq(&y, &x).expect("same dimension");
    let dxx = dmetric_sq(&x, &x).expect("same dimension");
    ensure(
        dxy == dyx,
        inputs,
        "d(x, y) = d(y, x)",
        || json!({"dxy": js(&dxy), "dyx": js(&dyx)}),
    )?;
    ensure(
        dxx.is_zero_tol() && dxy.is_nonnegative(),
        inputs,
        "d(x, x) = 0 ≤' d(x, y)",
        || js(&dxx),
    )?;
    let separated = dxy.e1.is_zero_tol()
        == x.components()
            .0
            .iter()
            .zip(y.components().0.iter())
            .all(|(a, b)| a.approx_eq(b))
        && dxy.e2.is_zero_tol()
            == x.components()
                .1
                .iter()
                .zip(y.components().1.iter())
                .all(|(a, b)| a.approx_eq(b));
    ensure(
        separated,
        inputs,
        "a component of d vanishes iff that component of x - y does",
        || js(&dxy),
    )?;
    let triangle = metric_triangle_holds(&x, &y, &z).expect("same dimension");
    ensure(triangle, inputs, "d(x, z) ≤' d(x, y) + d(y, z)", || {
        json!(false)
    })
}

fn invariance<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (x, y, t) = points::<T>(rng);
    let alpha: Hyperbolic<T> = sample::hyperbolic(rng);
    let inputs = || json!({"x": js(&x), "y": js(&y), "t": js(&t), "alpha": js(&alpha)});
    let d = dmetric_sq(&x, &y).expect("same dimension");
    let shifted = dmetric_sq(&(&x + &t), &(&y + &t)).expect("same dimension");
    ensure(shifted == d, inputs, "d(x + t, y + t) = d(x, y)", || {
        js(&shifted)
    })?;
    let scaled = dmetric_sq(&x.scale(&alpha), &y.scale(&alpha)).expect("same dimension");
    let expected = &(&alpha * &alpha) * &d;
    ensure(
        scaled.approx_eq(&expected),
        inputs,
        "d(αx, αy)² = α²·d(x, y)²",
        || js(&scaled),
    )
}

fn ball_membership<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let center: DVector<T> = sample::dvector(rng, n);
    let y: DVector<T> = sample::dvector(rng, n);
    let radius: Hyperbolic<T> =
        Hyperbolic::new(sample::integer(rng, 1, 6), sample::integer(rng, 1, 6));
    let inputs = || json!({"center": js(&center), "radius": js(&radius), "y": js(&y)});
    let ball = DBall::new(center.clone(), radius.clone()).expect("positive radius");
    // Independent check: per-component sums of squared differences.
    let sq = |a: Vec<T>, b: Vec<T>| {
        a.iter().zip(&b).fold(T::zero(), |acc, (p, q)| {
            let d = p.clone() - q.clone();
            acc + d.clone() * d
        })
    };
    let (c1, c2) = center.components();
    let (y1, y2) = y.components();
    let inside = sq(c1, y1).lt_tol(&(radius.e1.clone() * radius.e1.clone()))
        && sq(c2, y2).lt_tol(&(radius.e2.clone() * radius.e2.clone()));
    ensure(
        ball.contains(&y) == inside,
        inputs,
        "ball membership is strict in both components",
        || json!(ball.contains(&y)),
    )?;
    ensure(
        ball.contains(&center),
        inputs,
        "the center lies in its ball",
        || json!(false),
    )
}

fn baire_cover<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (bbox, cover) = sample::rect_cover::<T, _>(rng);
    let inputs = || json!({"bbox": bbox.to_json(), "cover": cover.iter().map(|r| r.to_json()).collect::<Vec<_>>()});
    match baire_witness(&bbox, &cover) {
        Ok(w) => {
            let contained = cover.get(w.index).is_some_and(|r| r.contains_ball(&w.ball));
            ensure(
                contained,
                inputs,
                "witness ball lies inside the chosen set",
                || json!({"index": w.index, "center": js(&w.ball.center), "radius": js(&w.ball.radius)}),
            )?;
            let shrinking = w.steps.iter().enumerate().all(|(m, s)| {
                let bound = crate::scalar::inv_pow2::<T>(m as u32 + 1);
                s.radius.e1.lt_tol(&bound) && s.radius.e2.lt_tol(&bound)
            });
            ensure(shrinking, inputs, "step radii stay below 1/2^m", || {
                json!(w.steps.len())
            })
        }
        Err(e) => ensure(
            false,
            inputs,
            "a witness for every finite closed cover",
            || json!(e.to_string()),
        ),
    }
}

fn baire_punctured<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (bbox, cover) = sample::punctured_cover::<T, _>(rng);
    let inputs = || json!({"bbox": bbox.to_json(), "cover": cover.iter().map(|r| r.to_json()).collect::<Vec<_>>()});
    let outcome = baire_witness(&bbox, &cover);
    ensure(
        matches!(outcome, Err(Error::NotACover(..))),
        inputs,
        "NotACover",
        || match &outcome {
            Ok(w) => json!({"index": w.index}),
            Err(e) => json!(e.to_string()),
        },
    )
}
