use num_complex::Complex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{ensure, js, prop, CaseResult, Ctx, Property};
use crate::analysis::{
    hyperplane_gauge_bound, hyperplane_normalize, integer_grid, inverse_map, map_from_graph,
    omt_delta, omt_preimage, ubp_bound, variety_extend_hyperplane, DHyperplane, MapFamily,
    GAUGE_GRID_POINTS,
};
use crate::convex::DConvexSet;
use crate::error::Error;
use crate::linear::{operator_dnorm, singular_values, BCLinearMap, BCVector, DVector};
use crate::metric::dnorm_bc;
use crate::order::lt_strict;
use crate::sample;
use crate::scalar::{inv_pow2, Bicomplex, Hyperbolic, Idem, Real};

pub(super) fn properties<T: Real>() -> Vec<Property> {
    vec![
        prop("theorems.omt", 100, omt::<T>),
        prop("theorems.imt", 100, imt::<T>),
        prop("theorems.cgt-graph", 100, cgt_graph::<T>),
        prop("theorems.cgt-non-graph", 100, cgt_non_graph::<T>),
        prop("theorems.ubp", 100, ubp::<T>),
        prop("theorems.ubp-growth", 20, ubp_growth::<T>),
        prop(
            "theorems.hyperplane-normalize",
            200,
            hyperplane_normalize_invariance::<T>,
        ),
        prop(
            "theorems.hyperplane-gauge-bound",
            200,
            hyperplane_gauge::<T>,
        ),
        prop(
            "theorems.hyperplane-zero-divisor",
            200,
            hyperplane_zero_divisor::<T>,
        ),
        prop("theorems.hyperplane-variety", 100, hyperplane_variety::<T>),
    ]
}

/// Sampled points per map or family.
const SAMPLES: usize = 1000;

/// Points strictly inside the ball of radius `radius`, with each component
/// norm drawn uniformly up to 99.9% of its radius.
fn point_in_ball(rng: &mut ChaCha8Rng, n: usize, radius: &Hyperbolic<f64>) -> BCVector<f64> {
    let mut comp = |r: f64| -> Vec<Complex<f64>> {
        let v: Vec<Complex<f64>> = (0..n)
            .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let target = r * rng.gen_range(0.0..0.999);
        if norm == 0.0 {
            return v;
        }
        v.into_iter().map(|z| z * (target / norm)).collect()
    };
    let c1 = comp(radius.e1);
    let c2 = comp(radius.e2);
    BCVector::from_components(&c1, &c2).expect("same dimension")
}

fn omt<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let t = sample::invertible_map::<T, _>(rng, n);
    let inputs = || json!({"t": js(&t)});
    let delta = match omt_delta(&t) {
        Ok(d) => d.delta,
        Err(e) => {
            return ensure(false, inputs, "invertible maps are open", || {
                json!(e.to_string())
            })
        }
    };
    let tf = t.to_f64();
    let one = Hyperbolic::new(1.0, 1.0);
    for _ in 0..SAMPLES {
        let y = point_in_ball(rng, n, &delta);
        let x = omt_preimage(&t, &y).expect("surjective");
        let image = tf.apply(&x).expect("dimensions");
        let norm = dnorm_bc(&x);
        ensure(
            image.approx_eq(&y) && lt_strict(&norm, &one),
            || json!({"t": js(&t), "y": js(&y)}),
            "B(0, δ) ⊆ T(B(0, 1))",
            || json!({"x": js(&x), "norm": js(&norm)}),
        )?;
    }
    Ok(())
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn imt<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let t = sample::invertible_map::<T, _>(rng, n);
    let inputs = || json!({"t": js(&t)});
    let inv = match inverse_map(&t) {
        Ok(i) => i,
        Err(e) => {
            return ensure(false, inputs, "invertible maps invert", || {
                json!(e.to_string())
            })
        }
    };
    let id = BCLinearMap::identity(n);
    let (left, right) = (
        t.compose(&inv.inverse).expect("square"),
        inv.inverse.compose(&t).expect("square"),
    );
    ensure(
        left.approx_eq(&id) && right.approx_eq(&id),
        inputs,
        "T·T⁻¹ = T⁻¹·T = I",
        || js(&left),
    )?;
    for c in Idem::BOTH {
        let sv = singular_values(&t.component(c));
        let direct = 1.0 / sv.last().copied().unwrap_or(f64::NAN);
        let reported = *inv.bound.component(c);
        ensure(
            close(reported, direct, 1e-6),
            inputs,
            "continuity bound is 1/σ_min",
            || json!({"component": c.to_string(), "reported": reported, "direct": direct}),
        )?;
    }
    Ok(())
}

fn cgt_graph<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let (t, basis) = sample::graph_basis::<T, _>(rng, n, m);
    let inputs = || json!({"basis": js(&basis), "n": n});
    let rebuilt = map_from_graph(&basis, n);
    ensure(
        rebuilt.as_ref().is_ok_and(|r| r.approx_eq(&t)),
        inputs,
        "the graph determines T",
        || json!(format!("{:?}", rebuilt.as_ref().map(js))),
    )?;
    // A graph map is bounded: ‖Tx‖ ≤' ‖T‖·‖x‖.
    let (tf, bound) = (t.to_f64(), operator_dnorm(&t));
    for _ in 0..20 {
        let x = point_in_ball(rng, n, &Hyperbolic::new(1.0, 1.0));
        let (tx, nx) = (dnorm_bc(&tf.apply(&x).expect("dimensions")), dnorm_bc(&x));
        let ok = Idem::BOTH
            .iter()
            .all(|&c| *tx.component(c) <= bound.component(c) * nx.component(c) + 1e-9);
        ensure(
            ok,
            inputs,
            "‖Tx‖ ≤' ‖T‖·‖x‖",
            || json!({"x": js(&x), "tx": js(&tx)}),
        )?;
    }
    Ok(())
}

fn cgt_non_graph<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let basis = sample::non_graph_basis::<T, _>(rng, n, m);
    let outcome = map_from_graph(&basis, n);
    ensure(
        matches!(outcome, Err(Error::NotAGraph(_))),
        || json!({"basis": js(&basis), "n": n}),
        "NotAGraph",
        || json!(format!("{:?}", outcome.as_ref().map(js))),
    )
}

fn ubp<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let (m, n, k) = (
        rng.gen_range(1..=3),
        rng.gen_range(1..=3),
        rng.gen_range(1..=4),
    );
    let maps: Vec<BCLinearMap<T>> = (0..k).map(|_| sample::map(rng, m, n)).collect();
    let eps = Hyperbolic::new(rng.gen_range(0.1..4.0), rng.gen_range(0.1..4.0));
    let family = MapFamily::new(maps.clone()).expect("shared shape");
    let inputs = || json!({"maps": js(&maps), "eps": js(&eps)});
    let bound = match ubp_bound(&family, &eps) {
        Ok(b) => b,
        Err(e) => {
            return ensure(false, inputs, "nonempty families are bounded", || {
                json!(e.to_string())
            })
        }
    };
    let floats: Vec<BCLinearMap<f64>> = maps.iter().map(BCLinearMap::to_f64).collect();
    for _ in 0..SAMPLES {
        let x = point_in_ball(rng, n, &bound.delta);
        for (idx, t) in floats.iter().enumerate() {
            let tx = dnorm_bc(&t.apply(&x).expect("dimensions"));
            ensure(
                lt_strict(&tx, &eps),
                inputs,
                "‖x‖ <' δ ⇒ ‖T_α x‖ <' ε",
                || json!({"member": idx, "x": js(&x), "norm": js(&tx), "m": js(&bound.m), "delta": js(&bound.delta)}),
            )?;
        }
    }
    Ok(())
}

/// Negative control: scaling members by `2^s` scales `M` by `2^s`.
fn ubp_growth<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let base = sample::invertible_map::<T, _>(rng, n);
    let eps = Hyperbolic::new(1.0, 1.0);
    let inputs = || json!({"base": js(&base)});
    let norm = operator_dnorm(&base);
    let mut members = Vec::new();
    for s in 0..8u32 {
        let factor = Bicomplex::from_real(T::one() / inv_pow2::<T>(s));
        members.push(BCLinearMap::from_fn(n, n, |r, c| {
            &factor * base.entry(r, c)
        }));
        let bound = ubp_bound(
            &MapFamily::new(members.clone()).expect("shared shape"),
            &eps,
        )
        .expect("nonempty");
        let scale = f64::from(1u32 << s);
        let grows = Idem::BOTH.iter().all(|&c| {
            close(*bound.m.component(c), scale * norm.component(c), 1e-9)
                && close(
                    *bound.delta.component(c),
                    1.0 / (scale * norm.component(c)),
                    1e-9,
                )
        });
        ensure(
            grows,
            inputs,
            "M = 2^s·‖T‖ and δ = ε/M",
            || json!({"s": s, "m": js(&bound.m), "delta": js(&bound.delta)}),
        )?;
    }
    Ok(())
}

fn hyperplane_normalize_invariance<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=4);
    let g = sample::nondegenerate_d_functional::<T, _>(rng, n);
    let c: Hyperbolic<T> = sample::invertible_hyperbolic(rng);
    let lambda: Hyperbolic<T> = sample::invertible_hyperbolic(rng);
    let inputs = || json!({"g": js(&g), "c": js(&c), "lambda": js(&lambda)});
    let base = hyperplane_normalize(&g, &c);
    let rescaled = hyperplane_normalize(&g.scale(&lambda), &(&lambda * &c));
    ensure(
        matches!((&base, &rescaled), (Ok(p), Ok(q)) if p.f.approx_eq(&q.f)),
        inputs,
        "{λg = λc} normalizes to the same {f = 1}",
        || json!({"base": format!("{base:?}"), "rescaled": format!("{rescaled:?}")}),
    )?;
    let f = base.expect("checked above").f;
    ensure(f.scale(&c).approx_eq(&g), inputs, "c·f = g", || js(&f))?;
    let h = DHyperplane::new(g.clone(), c.clone());
    let other = DHyperplane::new(g.scale(&lambda), &lambda * &c);
    ensure(
        h.same_set(&other).unwrap_or(false),
        inputs,
        "rescaled forms describe one hyperplane",
        || json!(false),
    )
}

fn hyperplane_gauge<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let b = sample::absorbing_set::<T, _>(rng, n, false);
    let g = sample::nondegenerate_d_functional::<T, _>(rng, n);
    let inputs = || json!({"b": b.to_json(), "g": js(&g)});
    let top = |c: Idem| b.component(c).maximize(&g.component(c)).expect("bounded");
    let margin: Hyperbolic<T> = sample::positive_hyperbolic(rng);
    let level = Hyperbolic::new(
        top(Idem::E1) + margin.e1.clone(),
        top(Idem::E2) + margin.e2.clone(),
    );
    let l = DHyperplane::new(g.clone(), level.clone());
    let f = match hyperplane_gauge_bound(&b, &l) {
        Ok(f) => f,
        Err(e) => {
            return ensure(
                false,
                inputs,
                "a hyperplane missing B is gauge-bounded",
                || json!(e.to_string()),
            )
        }
    };
    ensure(f.scale(&level).approx_eq(&g), inputs, "L = {f = 1}", || {
        js(&f)
    })?;
    // Componentwise order: checking each component over its own points covers
    // every D-point built from them. With facets `a·x ≤ b`, `b > 0`, the gauge is
    // `max(0, max a·x / b)`, compared here without dividing. Both sides are
    // positively homogeneous, so the integer copy of the grid suffices.
    let grid: Vec<DVector<T>> = integer_grid(n, GAUGE_GRID_POINTS);
    for c in Idem::BOTH {
        // Integer rescalings: `fi = λ·f` and each facet row scaled jointly; then
        // `f(x)·b ≤ a·x` reads `(λa - b·fi)·x ≥ 0`.
        let fc = f.component(c);
        let fi = T::clear_denominators(&fc);
        let lambda = fi
            .iter()
            .zip(&fc)
            .find(|(_, v)| !v.is_zero())
            .map_or(T::one(), |(s, v)| s.clone() / v.clone());
        let slacks: Vec<Vec<T>> = b
            .component(c)
            .halfspaces(false)
            .expect("small dimension")
            .into_iter()
            .map(|h| {
                let mut row = T::clear_denominators(&[h.a, vec![h.b]].concat());
                let rhs = row.pop().expect("nonempty");
                row.iter()
                    .zip(&fi)
                    .map(|(a, g)| a.clone() * lambda.clone() - rhs.clone() * g.clone())
                    .collect()
            })
            .collect();
        let points = b.component(c).vertices().expect("small dimension");
        for x in points
            .into_iter()
            .chain(grid.iter().map(|g| g.component(c)))
        {
            let fx = T::dot(&fi, &x);
            let gaps: Vec<T> = slacks.iter().map(|s| T::dot(s, &x)).collect();
            let upper = fx.le_tol(&T::zero()) || gaps.iter().any(|g| T::zero().le_tol(g));
            let lower = T::zero().le_tol(&fx) || gaps.iter().any(|g| g.le_tol(&T::zero()));
            ensure(
                upper && lower,
                inputs,
                "-q(-x) ≤' f(x) ≤' q(x)",
                || json!({"component": c.to_string(), "x": x.iter().map(ToString::to_string).collect::<Vec<_>>()}),
            )?;
        }
    }
    // The level pulled inside B must be rejected.
    let inside = Hyperbolic::new(top(Idem::E1).half(), top(Idem::E2).half());
    let meets = hyperplane_gauge_bound(&b, &DHyperplane::new(g.clone(), inside.clone()));
    ensure(
        matches!(meets, Err(Error::NotDisjoint { .. })),
        inputs,
        "a hyperplane through B is rejected",
        || json!({"level": js(&inside), "outcome": format!("{:?}", meets.map(|f| js(&f)))}),
    )
}

fn hyperplane_zero_divisor<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(1..=3);
    let g = sample::nondegenerate_d_functional::<T, _>(rng, n);
    let c: Hyperbolic<T> = sample::zero_divisor_hyperbolic(rng);
    let inputs = || json!({"g": js(&g), "c": js(&c)});
    let norm = hyperplane_normalize(&g, &c);
    ensure(
        matches!(norm, Err(Error::ZeroDivisorLevel)),
        inputs,
        "ZeroDivisorLevel",
        || json!(format!("{norm:?}")),
    )?;
    let b = DConvexSet::cube(n, &T::one(), false);
    let bound = hyperplane_gauge_bound(&b, &DHyperplane::new(g.clone(), c.clone()));
    ensure(
        matches!(bound, Err(Error::ZeroDivisorLevel)),
        inputs,
        "ZeroDivisorLevel",
        || json!(format!("{:?}", bound.map(|f| js(&f)))),
    )
}

fn hyperplane_variety<T: Real>(rng: &mut ChaCha8Rng, _: &Ctx) -> CaseResult {
    let n = rng.gen_range(2..=3);
    let k = rng.gen_range(0..n);
    let b = sample::absorbing_set::<T, _>(rng, n, false);
    let dirs: Vec<DVector<T>> = (0..k).map(|_| sample::dvector(rng, n)).collect();
    let mut x0: DVector<T> = sample::dvector(rng, n);
    let two = Hyperbolic::from_real(T::from_i64(2));
    let mut outcome = variety_extend_hyperplane(&x0, &dirs, &b);
    // Push the variety away from B until it misses it.
    for _ in 0..12 {
        if !matches!(outcome, Err(Error::NotDisjoint { .. })) {
            break;
        }
        x0 = x0.scale(&two);
        outcome = variety_extend_hyperplane(&x0, &dirs, &b);
    }
    let inputs = || json!({"b": b.to_json(), "m": js(&dirs), "x0": js(&x0)});
    let h = match outcome {
        Ok(h) => h,
        Err(Error::DegenerateBasis(_) | Error::DegenerateVariety(_)) => return Ok(()),
        Err(e) => {
            return ensure(false, inputs, "a variety missing B extends", || {
                json!(e.to_string())
            })
        }
    };
    let one = Hyperbolic::from_real(T::one());
    let zero = Hyperbolic::from_real(T::zero());
    let contains = h.f.eval(&x0).is_ok_and(|v| v.approx_eq(&one))
        && dirs
            .iter()
            .all(|m| h.f.eval(m).is_ok_and(|v| v.approx_eq(&zero)));
    ensure(contains, inputs, "x0 + span(M) ⊆ {f = 1}", || js(&h))?;
    let below = Idem::BOTH.iter().all(|&c| {
        let fc = h.f.component(c);
        b.component(c)
            .vertices()
            .expect("small dimension")
            .iter()
            .all(|v| {
                v.iter()
                    .zip(&fc)
                    .fold(T::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
                    .le_tol(&T::one())
            })
    });
    ensure(below, inputs, "B ⊆ {f ≤' 1}", || js(&h))
}
