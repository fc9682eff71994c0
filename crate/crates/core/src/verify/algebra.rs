use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::error::Error;
use crate::sample;
use crate::scalar::{Bicomplex, Conjugation, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("algebra.ring-laws", 10_000, ring_laws::<T>),
        prop("algebra.conjugation-table", 10_000, conjugation_table::<T>),
        prop("algebra.k-modulus", 10_000, k_modulus::<T>),
        prop(
            "algebra.k-norm-multiplicative",
            10_000,
            k_norm_multiplicative::<T>,
        ),
        prop("algebra.k-unit", 10_000, k_unit::<T>),
        prop("algebra.inverse-law", 10_000, inverse_law::<T>),
        prop("algebra.representations", 10_000, representations::<T>),
    ]
}

fn triple<T: Real>(rng: &mut ChaCha8Rng) -> (Bicomplex<T>, Bicomplex<T>, Bicomplex<T>) {
    (
        sample::bicomplex(rng),
        sample::bicomplex(rng),
        sample::bicomplex(rng),
    )
}

fn ring_laws<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let (a, b, c) = triple::<T>(rng);
    let one = Bicomplex::from_real(T::one());
    let zero = Bicomplex::from_real(T::zero());
    let laws: [(&str, Bicomplex<T>, Bicomplex<T>); 9] = [
        ("(a+b)+c = a+(b+c)", &(&a + &b) + &c, &a + &(&b + &c)),
        ("a+b = b+a", &a + &b, &b + &a),
        ("a+0 = a", &a + &zero, a.clone()),
        ("a+(-a) = 0", &a + &(-&a), zero.clone()),
        (
            "(ab)c = a(bc)",
            ctx.mul(&ctx.mul(&a, &b), &c),
            ctx.mul(&a, &ctx.mul(&b, &c)),
        ),
        ("ab = ba", ctx.mul(&a, &b), ctx.mul(&b, &a)),
        ("a·1 = a", ctx.mul(&a, &one), a.clone()),
        (
            "a(b+c) = ab+ac",
            ctx.mul(&a, &(&b + &c)),
            &ctx.mul(&a, &b) + &ctx.mul(&a, &c),
        ),
        (
            "(a+b)c = ac+bc",
            ctx.mul(&(&a + &b), &c),
            &ctx.mul(&a, &c) + &ctx.mul(&b, &c),
        ),
    ];
    for (law, lhs, rhs) in laws {
        ensure(
            lhs.approx_eq(&rhs),
            || json!({"a": js(&a), "b": js(&b), "c": js(&c)}),
            law,
            || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
        )?;
    }
    Ok(())
}

fn conjugation_table<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let (a, b, _) = triple::<T>(rng);
    let d = |z: &Bicomplex<T>, k: Conjugation| z.conjugate(k);
    let [d1, d2, d3] = Conjugation::ALL;
    let table: [(&str, Bicomplex<T>, Bicomplex<T>); 6] = [
        ("†1∘†2 = †3", d(&d(&a, d2), d1), d(&a, d3)),
        ("†2∘†1 = †3", d(&d(&a, d1), d2), d(&a, d3)),
        ("†1∘†3 = †2", d(&d(&a, d3), d1), d(&a, d2)),
        ("†2∘†3 = †1", d(&d(&a, d3), d2), d(&a, d1)),
        ("†1 involution", d(&d(&a, d1), d1), a.clone()),
        ("†2 involution", d(&d(&a, d2), d2), a.clone()),
    ];
    for (law, lhs, rhs) in table {
        ensure(
            lhs.approx_eq(&rhs),
            || json!({"a": js(&a)}),
            law,
            || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
        )?;
    }
    ensure(
        d(&d(&a, d3), d3).approx_eq(&a),
        || json!({"a": js(&a)}),
        "†3 involution",
        || js(&d(&d(&a, d3), d3)),
    )?;
    for k in Conjugation::ALL {
        let lhs = d(&ctx.mul(&a, &b), k);
        let rhs = ctx.mul(&d(&a, k), &d(&b, k));
        ensure(
            lhs.approx_eq(&rhs) && d(&(&a + &b), k).approx_eq(&(&d(&a, k) + &d(&b, k))),
            || json!({"a": js(&a), "b": js(&b), "conjugation": format!("{k:?}")}),
            "conjugation is a ring automorphism",
            || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
        )?;
    }
    Ok(())
}

fn k_modulus<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let a: Bicomplex<T> = sample::bicomplex(rng);
    let lhs = ctx.mul(&a, &a.conjugate(Conjugation::Dagger3));
    let rhs = Bicomplex::from_hyperbolic(&a.norm_k_sq());
    ensure(
        lhs.approx_eq(&rhs),
        || json!({"a": js(&a)}),
        "Z·Z†3 = |Z|²_k",
        || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
    )
}

fn k_norm_multiplicative<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let (a, b, _) = triple::<T>(rng);
    let lhs = ctx.mul(&a, &b).norm_k_sq();
    let rhs = &a.norm_k_sq() * &b.norm_k_sq();
    ensure(
        lhs.approx_eq(&rhs),
        || json!({"a": js(&a), "b": js(&b)}),
        "|ZW|²_k = |Z|²_k |W|²_k",
        || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
    )
}

fn k_unit<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let a: Bicomplex<T> = sample::bicomplex(rng);
    let k = Bicomplex::unit_k();
    let e1 = Bicomplex::unit_e1();
    let e2 = Bicomplex::unit_e2();
    let one = Bicomplex::from_real(T::one());
    let checks: [(&str, Bicomplex<T>, Bicomplex<T>); 5] = [
        ("k = e1 - e2", k.clone(), &e1 - &e2),
        (
            "k = ij",
            k.clone(),
            ctx.mul(&Bicomplex::unit_i(), &Bicomplex::unit_j()),
        ),
        ("k² = 1", ctx.mul(&k, &k), one.clone()),
        ("e1 + e2 = 1", &e1 + &e2, one),
        (
            "kZ = e1 Z - e2 Z",
            ctx.mul(&k, &a),
            &ctx.mul(&e1, &a) - &ctx.mul(&e2, &a),
        ),
    ];
    for (law, lhs, rhs) in checks {
        ensure(
            lhs.approx_eq(&rhs),
            || json!({"a": js(&a)}),
            law,
            || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
        )?;
    }
    Ok(())
}

fn inverse_law<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let a: Bicomplex<T> = sample::bicomplex(rng);
    let inputs = || json!({"a": js(&a)});
    match a.inverse() {
        Ok(inv) => {
            let prod = ctx.mul(&a, &inv);
            ensure(
                prod.approx_eq(&Bicomplex::from_real(T::one())),
                inputs,
                "Z·Z⁻¹ = 1",
                || js(&prod),
            )?;
            let via = a.inverse_via_conjugate();
            ensure(
                via.as_ref().map(|v| v.approx_eq(&inv)).unwrap_or(false),
                inputs,
                "Z†2/|Z|²_i = Z⁻¹",
                || json!(format!("{via:?}")),
            )
        }
        Err(e) => {
            let expected = if a.is_zero_tol() {
                Error::ZeroDivision
            } else {
                Error::NullCone
            };
            ensure(
                a.is_zero_divisor() || a.is_zero_tol(),
                inputs,
                "only zero and null-cone elements lack inverses",
                || json!(e.to_string()),
            )?;
            ensure(e == expected, inputs, "matching inversion error", || {
                json!(e.to_string())
            })
        }
    }
}

fn representations<T: Real>(rng: &mut ChaCha8Rng, ctx: &Ctx) -> CaseResult {
    let (a, b, _) = triple::<T>(rng);
    let (w1, w2) = a.w();
    let back = Bicomplex::from_w(w1, w2);
    ensure(
        back == a,
        || json!({"a": js(&a)}),
        "idempotent ↔ w1 + j·w2 round trip",
        || js(&back),
    )?;
    let real = Bicomplex::from_real_basis(a.real_basis());
    ensure(
        real == a,
        || json!({"a": js(&a)}),
        "real-basis round trip",
        || js(&real),
    )?;
    // Product through the w-form: (w1 + j w2)(v1 + j v2) = (w1v1 - w2v2) + j(w1v2 + w2v1).
    let (v1, v2) = b.w();
    let (w1, w2) = a.w();
    let via_w = Bicomplex::from_w(
        w1.clone() * v1.clone() - w2.clone() * v2.clone(),
        w1 * v2 + w2 * v1,
    );
    let prod = ctx.mul(&a, &b);
    ensure(
        via_w.approx_eq(&prod),
        || json!({"a": js(&a), "b": js(&b)}),
        "idempotent product agrees with the w-form product",
        || json!({"idempotent": js(&prod), "w-form": js(&via_w)}),
    )
}
