use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::order::{compare, inf_d, is_d_bounded, le, lt_strict, sup_d, OrderResult};
use crate::sample;
use crate::scalar::{Hyperbolic, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("order.partial-order", 5_000, partial_order::<T>),
        prop("order.strict-order", 5_000, strict_order::<T>),
        prop("order.compatibility", 5_000, compatibility::<T>),
        prop("order.sup-inf", 2_000, sup_inf::<T>),
    ]
}

/// Draws from a coarse grid so that ties and comparable pairs are common.
fn coarse<T: Real>(rng: &mut ChaCha8Rng) -> Hyperbolic<T> {
    Hyperbolic::new(sample::integer(rng, -2, 2), sample::integer(rng, -2, 2))
}

fn partial_order<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (a, b, c) = (coarse::<T>(rng), coarse::<T>(rng), coarse::<T>(rng));
    let inputs = || json!({"a": js(&a), "b": js(&b), "c": js(&c)});
    ensure(le(&a, &a), inputs, "reflexive", || json!(false))?;
    ensure(
        !(le(&a, &b) && le(&b, &a)) || a == b,
        inputs,
        "antisymmetric",
        || json!(false),
    )?;
    ensure(
        !(le(&a, &b) && le(&b, &c)) || le(&a, &c),
        inputs,
        "transitive",
        || json!(false),
    )?;
    let cmp = compare(&a, &b);
    let consistent = match cmp {
        OrderResult::Equal => a == b,
        OrderResult::Less => le(&a, &b) && a != b,
        OrderResult::Greater => le(&b, &a) && a != b,
        OrderResult::Incomparable => !le(&a, &b) && !le(&b, &a),
    };
    ensure(consistent, inputs, "compare agrees with ≤'", || {
        json!(format!("{cmp:?}"))
    })
}

fn strict_order<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (a, b) = (coarse::<T>(rng), coarse::<T>(rng));
    let inputs = || json!({"a": js(&a), "b": js(&b)});
    let strict = lt_strict(&a, &b);
    ensure(!strict || le(&a, &b), inputs, "<' implies ≤'", || {
        json!(strict)
    })?;
    let both = a.e1 < b.e1 && a.e2 < b.e2;
    ensure(
        strict == both,
        inputs,
        "<' is strict in both components",
        || json!(strict),
    )?;
    let diff = &b - &a;
    ensure(
        le(&a, &b) == diff.is_nonnegative(),
        inputs,
        "a ≤' b iff b - a ∈ D⁺",
        || js(&diff),
    )
}

fn compatibility<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (a, b, c): (Hyperbolic<T>, Hyperbolic<T>, Hyperbolic<T>) = (
        sample::hyperbolic(rng),
        sample::hyperbolic(rng),
        sample::hyperbolic(rng),
    );
    let inputs = || json!({"a": js(&a), "b": js(&b), "c": js(&c)});
    if le(&a, &b) {
        ensure(
            le(&(&a + &c), &(&b + &c)),
            inputs,
            "a ≤' b ⇒ a + c ≤' b + c",
            || json!(false),
        )?;
        let p = c.abs();
        ensure(
            le(&(&a * &p), &(&b * &p)),
            inputs,
            "a ≤' b, 0 ≤' p ⇒ ap ≤' bp",
            || json!(false),
        )?;
    }
    Ok(())
}

fn sup_inf<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let len = rng.gen_range(1..=6);
    let set: Vec<Hyperbolic<T>> = (0..len).map(|_| sample::hyperbolic(rng)).collect();
    let inputs = || json!({"set": js(&set)});
    let (Ok(sup), Ok(inf)) = (sup_d(&set), inf_d(&set)) else {
        return ensure(
            false,
            inputs,
            "finite sets have a D-supremum and D-infimum",
            || json!(null),
        );
    };
    ensure(
        set.iter().all(|x| le(x, &sup) && le(&inf, x)),
        inputs,
        "sup is an upper and inf a lower bound",
        || json!({"sup": js(&sup), "inf": js(&inf)}),
    )?;
    // Least: each component of the supremum is attained by some element.
    let attained = |pick: fn(&Hyperbolic<T>) -> &T, v: &T| set.iter().any(|x| pick(x) == v);
    ensure(
        attained(|h| &h.e1, &sup.e1)
            && attained(|h| &h.e2, &sup.e2)
            && attained(|h| &h.e1, &inf.e1)
            && attained(|h| &h.e2, &inf.e2),
        inputs,
        "sup and inf are tight componentwise",
        || json!({"sup": js(&sup), "inf": js(&inf)}),
    )?;
    let bound = &sup
        .abs()
        .zip_with(&inf.abs(), |x, y| x.clone().max_of(y.clone()))
        + &Hyperbolic::from_real(T::one());
    ensure(
        is_d_bounded(&set, &bound).unwrap_or(false),
        inputs,
        "set is D-bounded by max(|sup|, |inf|) + 1",
        || json!(false),
    )
}
