use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::linear::{
    hyperbolic_part, hyperbolic_part_via, image_convex, reconstruct, reconstruct_eval, Axis,
    BCVector, DVector, FunctionalForm,
};
use crate::sample;
use crate::scalar::{Bicomplex, Hyperbolic, Idem, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("linear.d-linearity", 2_000, d_linearity::<T>),
        prop(
            "linear.hyperbolic-part-forms",
            1_000,
            hyperbolic_part_forms::<T>,
        ),
        prop("linear.reconstruction", 1_000, reconstruction::<T>),
        prop("linear.map-split", 1_000, map_split::<T>),
        prop("linear.image-convex", 300, image_of_convex::<T>),
    ]
}

fn d_linearity<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=4);
    let f = sample::d_functional::<T, _>(rng, n);
    let (x, y): (DVector<T>, DVector<T>) = (sample::dvector(rng, n), sample::dvector(rng, n));
    let (a, b): (Hyperbolic<T>, Hyperbolic<T>) = (sample::hyperbolic(rng), sample::hyperbolic(rng));
    let inputs = || json!({"f": js(&f), "x": js(&x), "y": js(&y), "alpha": js(&a), "beta": js(&b)});
    let ev = |v: &DVector<T>| f.eval(v).expect("same dimension");
    let lhs = ev(&(&x.scale(&a) + &y.scale(&b)));
    let rhs = &(&a * &ev(&x)) + &(&b * &ev(&y));
    ensure(
        lhs.approx_eq(&rhs),
        inputs,
        "f(αx + βy) = αf(x) + βf(y)",
        || json!({"lhs": js(&lhs), "rhs": js(&rhs)}),
    )?;
    let split = f.eval_split(&x).expect("same dimension");
    ensure(
        split.approx_eq(&ev(&x)),
        inputs,
        "f(x) = e1 f1(x1) + e2 f2(x2)",
        || js(&split),
    )
}

fn hyperbolic_part_forms<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=4);
    let h = sample::bc_functional::<T, _>(rng, n);
    let reference = hyperbolic_part(&h);
    for form in FunctionalForm::ALL {
        let via = hyperbolic_part_via(&h, form);
        ensure(
            via.approx_eq(&reference),
            || json!({"h": js(&h), "form": form.name()}),
            "every decomposition yields the same hyperbolic part",
            || json!({"via": js(&via), "reference": js(&reference)}),
        )?;
    }
    Ok(())
}

fn reconstruction<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=4);
    let h = sample::bc_functional::<T, _>(rng, n);
    let x: BCVector<T> = sample::bcvector(rng, n);
    let f = hyperbolic_part(&h);
    let hx = h.eval(&x).expect("same dimension");
    let hd = f.eval_on_bc(&x).expect("same dimension");
    ensure(
        hd.approx_eq(&hx.hyperbolic_part()),
        || json!({"h": js(&h), "x": js(&x)}),
        "h_D(x) is the hyperbolic part of h(x)",
        || json!({"h_D(x)": js(&hd), "h(x)": js(&hx)}),
    )?;
    for (axis, label) in [(Axis::I, "i"), (Axis::J, "j")] {
        let back = reconstruct(&f, axis);
        ensure(
            back.as_ref().is_ok_and(|b| b.approx_eq(&h)),
            || json!({"h": js(&h), "axis": label}),
            "h is recovered exactly from h_D",
            || json!(format!("{back:?}")),
        )?;
        let at = reconstruct_eval(&f, axis, &x);
        ensure(
            at.as_ref().is_ok_and(|v| v.approx_eq(&hx)),
            || json!({"h": js(&h), "x": js(&x), "axis": label}),
            "h(x) = h_D(x) - u·h_D(u·x)",
            || json!(format!("{at:?}")),
        )?;
    }
    Ok(())
}

fn map_split<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (m, n, p) = (
        rng.gen_range(1..=3),
        rng.gen_range(1..=3),
        rng.gen_range(1..=3),
    );
    let t = sample::map::<T, _>(rng, m, n);
    let s = sample::map::<T, _>(rng, n, p);
    let x: BCVector<T> = sample::bcvector(rng, p);
    let inputs = || json!({"t": js(&t), "s": js(&s), "x": js(&x)});
    let sx = s.apply(&x).expect("dimensions");
    let tsx = t.apply(&sx).expect("dimensions");
    let [d1, d2] = Idem::BOTH.map(|c| {
        t.component(c)
            .mul_vec(&s.component(c).mul_vec(&x.component(c)))
    });
    let direct = BCVector::from_components(&d1, &d2).expect("dimensions");
    ensure(
        direct.approx_eq(&tsx),
        inputs,
        "T acts on each idempotent component separately",
        || js(&direct),
    )?;
    let ts = t.compose(&s).expect("dimensions");
    let composed = ts.apply(&x).expect("dimensions");
    ensure(composed.approx_eq(&tsx), inputs, "(T∘S)x = T(Sx)", || {
        js(&composed)
    })?;
    let lambda: Bicomplex<T> = sample::bicomplex(rng);
    let scaled = t.apply(&sx.scale(&lambda)).expect("dimensions");
    ensure(
        scaled.approx_eq(&tsx.scale(&lambda)),
        inputs,
        "T(λx) = λT(x)",
        || js(&scaled),
    )
}

fn image_of_convex<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let open = rng.gen_bool(0.5);
    let a = sample::absorbing_set::<T, _>(rng, n, open);
    let f = sample::nondegenerate_d_functional::<T, _>(rng, n);
    let inputs = || json!({"a": a.to_json(), "f": js(&f)});
    let image = match image_convex(&f, &a) {
        Ok(i) => i,
        Err(e) => {
            return ensure(false, inputs, "image of a bounded set", || {
                json!(e.to_string())
            })
        }
    };
    for (c, interval) in [(Idem::E1, &image.c1), (Idem::E2, &image.c2)] {
        let coeffs = f.component(c);
        let values: Vec<T> = a
            .component(c)
            .vertices()
            .expect("small dimension")
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&coeffs)
                    .fold(T::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
            })
            .collect();
        let lo = values.iter().cloned().reduce(T::min_of);
        let hi = values.iter().cloned().reduce(T::max_of);
        ensure(
            same_end(&interval.lo, &lo) && same_end(&interval.hi, &hi) && interval.open == open,
            inputs,
            "image endpoints are the extreme vertex values",
            || json!({"component": c.to_string(), "lo": lo.map(|v| v.to_string()), "hi": hi.map(|v| v.to_string())}),
        )?;
        if let (Some(l), Some(h)) = (&interval.lo, &interval.hi) {
            let mid = (l.clone() + h.clone()).half();
            ensure(
                interval.contains(&mid),
                inputs,
                "interval contains its midpoint",
                || json!(mid.to_string()),
            )?;
        }
    }
    Ok(())
}

fn same_end<T: Real>(a: &Option<T>, b: &Option<T>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x.approx_eq(y),
        (None, None) => true,
        _ => false,
    }
}
