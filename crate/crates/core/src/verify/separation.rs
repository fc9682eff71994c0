use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::analysis::{
    lp_separation_oracle, oracle_agrees, separate_bicomplex, separate_hyperbolic,
};
use crate::convex::DConvexSet;
use crate::error::Error;
use crate::linear::hyperbolic_part;
use crate::sample;
use crate::scalar::{Idem, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("separation.certificate", 200, certificate::<T>),
        prop("separation.overlap", 200, overlap::<T>),
    ]
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `f(a) <' γ ≤' f(b)` over all vertices, checked per component: the
/// product of vertex sets attains every componentwise combination.
fn separates<T: Real>(
    f: &crate::linear::DLinearFunctional<T>,
    gamma: &crate::scalar::Hyperbolic<T>,
    a: &DConvexSet<T>,
    b: &DConvexSet<T>,
) -> bool {
    Idem::BOTH.iter().all(|&c| {
        let fc = f.component(c);
        let g = gamma.component(c);
        let va = a.component(c).vertices().expect("small dimension");
        let vb = b.component(c).vertices().expect("small dimension");
        va.iter().all(|v| dot(&fc, v).lt_tol(g)) && vb.iter().all(|v| g.le_tol(&dot(&fc, v)))
    })
}

fn certificate<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let (a, b) = sample::separable_pair::<T, _>(rng, n);
    let inputs = || json!({"a": a.to_json(), "b": b.to_json()});
    let outcome = separate_hyperbolic(&a, &b);
    let oracle = lp_separation_oracle(&a, &b).expect("same dimension");
    ensure(
        oracle_agrees(&outcome, &oracle),
        inputs,
        "construction and LP oracle agree",
        || json!({"construction": outcome.as_ref().map(|_| "certificate").map_err(|e| e.to_string()), "oracle": oracle.iter().map(Option::is_some).collect::<Vec<_>>()}),
    )?;
    let cert = match outcome {
        Ok(c) => c,
        Err(e) => {
            return ensure(false, inputs, "component-disjoint sets separate", || {
                json!(e.to_string())
            })
        }
    };
    ensure(
        cert.all_hold() && cert.verify(&a, &b).unwrap_or(false),
        inputs,
        "every recorded vertex check holds",
        || js(&cert.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>()),
    )?;
    ensure(
        separates(&cert.f, &cert.gamma, &a, &b),
        inputs,
        "f(a) <' γ ≤' f(b) on all vertices",
        || json!({"f": js(&cert.f), "gamma": js(&cert.gamma)}),
    )?;
    if n % 2 == 0 {
        let lifted = separate_bicomplex(&a, &b);
        ensure(
            lifted
                .as_ref()
                .is_ok_and(|s| hyperbolic_part(&s.h).approx_eq(&cert.f) && s.gamma == cert.gamma),
            inputs,
            "the BC lift has the certificate as its hyperbolic part",
            || json!(format!("{:?}", lifted.as_ref().map(|s| &s.h))),
        )?;
    }
    Ok(())
}

fn overlap<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let (a, b) = sample::overlapping_pair::<T, _>(rng, n);
    let inputs = || json!({"a": a.to_json(), "b": b.to_json()});
    let outcome = separate_hyperbolic(&a, &b);
    let oracle = lp_separation_oracle(&a, &b).expect("same dimension");
    ensure(
        matches!(outcome, Err(Error::NotDisjoint { .. })),
        inputs,
        "NotDisjoint",
        || {
            json!(outcome
                .as_ref()
                .map(|_| "certificate")
                .map_err(|e| e.to_string()))
        },
    )?;
    ensure(
        oracle_agrees(&outcome, &oracle),
        inputs,
        "construction and LP oracle agree",
        || json!(oracle.iter().map(Option::is_some).collect::<Vec<_>>()),
    )
}
