use bicomplex::analysis::{
    extend_dominated, hyperplane_gauge_bound, hyperplane_normalize, inverse_map, is_dominated,
    map_from_graph, omt_delta, separate_bicomplex, separate_hyperbolic, ubp_bound,
    variety_extend_hyperplane, DHyperplane, MapFamily,
};
use bicomplex::convex::{DConvexSet, RealPolytope};
use bicomplex::linear::{reconstruct, Axis, BCLinearMap, BCVector, DLinearFunctional, DVector};
use bicomplex::{Bicomplex, BicomplexQ, Error, Hyperbolic, HyperbolicQ, Idem, Rational, Real};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn h(a: i64, b: i64) -> HyperbolicQ {
    Hyperbolic::from_ints(a, b)
}

fn point(v: &[(i64, i64)]) -> DVector<Rational> {
    DVector(v.iter().map(|&(a, b)| h(a, b)).collect())
}

fn functional(v: &[(i64, i64)]) -> DLinearFunctional<Rational> {
    DLinearFunctional::new(point(v))
}

fn singleton(p1: &[i64], p2: &[i64]) -> DConvexSet<Rational> {
    let pt = |v: &[i64]| RealPolytope::point(v.iter().map(|&x| q(x)).collect());
    DConvexSet::new(pt(p1), pt(p2), false).unwrap()
}

fn real(a: i64, b: i64) -> BicomplexQ {
    Bicomplex::from_hyperbolic(&h(a, b))
}

/// Largest value of a real functional on the box `[lo, hi]`.
fn box_max(f: &[Rational], lo: &[Rational], hi: &[Rational]) -> Rational {
    f.iter()
        .zip(lo.iter().zip(hi))
        .map(|(c, (l, u))| (c * l).max_of(c * u))
        .fold(q(0), |s, t| s + t)
}

/// `f ≤' q_B` for a box pair around the origin: `f ≤ 1` on each component box.
fn dominated_on_boxes(
    f: &DLinearFunctional<Rational>,
    boxes: &[(Vec<Rational>, Vec<Rational>); 2],
) -> bool {
    Idem::BOTH.iter().all(|&c| {
        let (lo, hi) = &boxes[c.index()];
        box_max(&f.component(c), lo, hi) <= q(1)
    })
}

fn l1(v: &[Rational]) -> Rational {
    v.iter()
        .map(|x| x.clone().max_of(-x.clone()))
        .fold(q(0), |s, t| s + t)
}

#[test]
fn one_step_extension_in_the_plane() {
    let cube = DConvexSet::cube(2, &q(1), false);
    let g = functional(&[(1, 1), (0, 0)]);
    let f = extend_dominated(&g, &[point(&[(1, 1), (0, 0)])], &cube, 2).unwrap();
    assert_eq!(f.coeffs.0[0], h(1, 1));
    for c in Idem::BOTH {
        let coeffs = f.component(c);
        assert!(l1(&coeffs) <= q(1));
        assert!(coeffs[1] >= q(-1) && coeffs[1] <= q(1));
    }
    assert!(is_dominated(&f, &cube).unwrap());
    let zero = extend_dominated(&functional(&[(0, 0), (0, 0)]), &[], &cube, 2).unwrap();
    assert!(is_dominated(&zero, &cube).unwrap());
    let full = extend_dominated(
        &g,
        &[point(&[(1, 1), (0, 0)]), point(&[(0, 0), (1, 1)])],
        &cube,
        2,
    )
    .unwrap();
    assert_eq!(full, g);
}

#[test]
fn extension_refuses_undominated_data() {
    let cube = DConvexSet::cube(1, &q(1), false);
    let g = functional(&[(2, 1)]);
    assert_eq!(
        extend_dominated(&g, &[point(&[(1, 1)])], &cube, 1),
        Err(Error::Domination(Idem::E1))
    );
}

#[test]
fn separating_an_interval_from_a_point() {
    let a = DConvexSet::cube(1, &q(1), true);
    let b = singleton(&[2], &[3]);
    let cert = separate_hyperbolic(&a, &b).unwrap();
    let scale = h(2, 3);
    assert_eq!(&cert.f.coeffs.0[0] * &scale, h(1, 1));
    assert_eq!(cert.gamma, h(1, 1));
    assert_eq!(&cert.gamma * &scale, h(2, 3));
    assert!(cert.all_hold() && cert.verify(&a, &b).unwrap());
    for k in -9..=9 {
        let inside = DVector(vec![Hyperbolic::new(r(k, 10), r(-k, 10))]);
        let value = cert.f.eval(&inside).unwrap();
        assert!(value.e1 < cert.gamma.e1 && value.e2 < cert.gamma.e2);
    }
    let mirrored = separate_hyperbolic(&a, &singleton(&[-2], &[-3])).unwrap();
    assert_eq!(mirrored.f.coeffs.0[0], -cert.f.coeffs.0[0].clone());
}

#[test]
fn overlap_is_reported_with_a_witness() {
    let a = DConvexSet::cube(1, &q(1), true);
    let err = separate_hyperbolic(&a, &singleton(&[0], &[3])).unwrap_err();
    let Error::NotDisjoint { component, witness } = err else {
        panic!("expected NotDisjoint, got {err:?}")
    };
    assert_eq!(component, Idem::E1);
    assert_eq!(witness.len(), 1);
    let closed = DConvexSet::cube(1, &q(1), false);
    assert_eq!(
        separate_hyperbolic(&closed, &singleton(&[2], &[3])).unwrap_err(),
        Error::NotOpen
    );
}

#[test]
fn bicomplex_lift() {
    let a = DConvexSet::cube(2, &q(1), true);
    let b = singleton(&[3, 0], &[0, 4]);
    let sep = separate_bicomplex(&a, &b).unwrap();
    assert_eq!(
        bicomplex::linear::hyperbolic_part(&sep.h),
        sep.certificate.f
    );
    assert_ne!(sep.h, bicomplex::linear::BCLinearFunctional::zero(1));
    assert_eq!(reconstruct(&sep.certificate.f, Axis::J).unwrap(), sep.h);
}

#[test]
fn normalizing_hyperplanes() {
    let l = hyperplane_normalize(&functional(&[(2, 4)]), &h(2, 4)).unwrap();
    assert_eq!(l.f, functional(&[(1, 1)]));
    assert_eq!(l.level, h(1, 1));
    assert!(l.contains(&point(&[(1, 1)])) && !l.contains(&point(&[(1, 2)])));
    assert_eq!(
        hyperplane_normalize(&functional(&[(2, 4)]), &h(1, 0)),
        Err(Error::ZeroDivisorLevel)
    );
    assert_eq!(
        hyperplane_normalize(&functional(&[(0, 4)]), &h(1, 1)),
        Err(Error::DegenerateFunctional(Idem::E1))
    );
}

#[test]
fn gauge_bound_in_one_dimension() {
    let b = DConvexSet::cube(1, &q(1), true);
    let l = DHyperplane::new(functional(&[(1, 1)]), h(2, 2));
    let f = hyperplane_gauge_bound(&b, &l).unwrap();
    assert_eq!(f.coeffs.0[0], Hyperbolic::new(r(1, 2), r(1, 2)));
    for k in -20..=20 {
        let x = Hyperbolic::new(r(k, 4), r(-k, 3));
        let fx = f.eval(&DVector(vec![x.clone()])).unwrap();
        for (v, gauge) in [(fx.e1, x.e1.clone()), (fx.e2, x.e2.clone())] {
            let abs = gauge.clone().max_of(-gauge);
            assert!(-abs.clone() <= v && v <= abs);
        }
    }
    let touching = DHyperplane::new(functional(&[(1, 1)]), Hyperbolic::new(q(2), r(1, 2)));
    assert!(matches!(
        hyperplane_gauge_bound(&b, &touching),
        Err(Error::NotDisjoint {
            component: Idem::E2,
            ..
        })
    ));
}

#[test]
fn varieties_extend_to_hyperplanes() {
    let b = DConvexSet::cube(2, &q(1), false);
    let x0 = point(&[(3, 3), (0, 0)]);
    let hp = variety_extend_hyperplane(&x0, &[], &b).unwrap();
    assert!(hp.contains(&x0));
    assert_eq!(hp.f.coeffs.0[0], Hyperbolic::new(r(1, 3), r(1, 3)));
    let unit = (vec![q(-1), q(-1)], vec![q(1), q(1)]);
    assert!(dominated_on_boxes(&hp.f, &[unit.clone(), unit]));
    let line =
        variety_extend_hyperplane(&point(&[(2, 2), (0, 0)]), &[point(&[(0, 0), (1, 1)])], &b)
            .unwrap();
    assert_eq!(
        line.f,
        functional(&[(1, 1), (0, 0)]).scale(&Hyperbolic::new(r(1, 2), r(1, 2)))
    );
    let d1 = DConvexSet::cube(1, &q(1), false);
    assert_eq!(
        variety_extend_hyperplane(&point(&[(1, 3)]), &[point(&[(2, 0)])], &d1),
        Err(Error::DegenerateVariety(Idem::E1))
    );
}

#[test]
fn uniform_bounds() {
    let one = Hyperbolic::new(1.0, 1.0);
    let single = ubp_bound(
        &MapFamily::new(vec![BCLinearMap::<Rational>::identity(1)]).unwrap(),
        &one,
    )
    .unwrap();
    assert_eq!((single.m, single.delta), (one.clone(), one.clone()));
    let family = MapFamily::new(vec![
        BCLinearMap::diagonal(&[real(2, 3)]),
        BCLinearMap::identity(1),
    ])
    .unwrap();
    let bound = ubp_bound(&family, &Hyperbolic::new(6.0, 6.0)).unwrap();
    assert!((bound.m.e1 - 2.0).abs() < 1e-9 && (bound.m.e2 - 3.0).abs() < 1e-9);
    assert!((bound.delta.e1 - 3.0).abs() < 1e-9 && (bound.delta.e2 - 2.0).abs() < 1e-9);
    let empty = MapFamily::<Rational>::new(Vec::new()).unwrap();
    assert_eq!(ubp_bound(&empty, &one), Err(Error::EmptyFamily));
}

#[test]
fn open_mapping_radius() {
    let id = omt_delta(&BCLinearMap::<Rational>::identity(2)).unwrap();
    assert!((id.delta.e1 - 1.0).abs() < 1e-9 && (id.delta.e2 - 1.0).abs() < 1e-9);
    let diag = omt_delta(&BCLinearMap::diagonal(&[real(2, 3)])).unwrap();
    assert!((diag.delta.e1 - 2.0).abs() < 1e-9 && (diag.delta.e2 - 3.0).abs() < 1e-9);
    assert!(matches!(
        omt_delta(&BCLinearMap::<Rational>::zero(1, 1)),
        Err(Error::NotSurjective(_))
    ));
}

#[test]
fn inverses() {
    let inv = inverse_map(&BCLinearMap::diagonal(&[real(2, 4)])).unwrap();
    let expected = Bicomplex::from_hyperbolic(&Hyperbolic::new(r(1, 2), r(1, 4)));
    assert_eq!(inv.inverse, BCLinearMap::diagonal(&[expected]));
    assert!((inv.bound.e1 - 0.5).abs() < 1e-9 && (inv.bound.e2 - 0.25).abs() < 1e-9);
    let id = inverse_map(&BCLinearMap::<Rational>::identity(2)).unwrap();
    assert_eq!(id.inverse, BCLinearMap::identity(2));
    assert_eq!(
        inverse_map(&BCLinearMap::diagonal(&[real(1, 0)])).unwrap_err(),
        Error::NotBijective(Idem::E2)
    );
}

#[test]
fn maps_from_graphs() {
    let c = Bicomplex::from_real_basis([q(1), q(2), q(-1), q(3)]);
    let t = map_from_graph(&[BCVector(vec![real(1, 1), c.clone()])], 1).unwrap();
    assert_eq!(t, BCLinearMap::diagonal(&[c]));
    let diagonal = [
        BCVector(vec![real(1, 1), real(0, 0), real(1, 1), real(0, 0)]),
        BCVector(vec![real(0, 0), real(1, 1), real(0, 0), real(1, 1)]),
    ];
    assert_eq!(
        map_from_graph(&diagonal, 2).unwrap(),
        BCLinearMap::identity(2)
    );
    assert!(matches!(
        map_from_graph(&[BCVector(vec![real(0, 0), real(1, 1)])], 1),
        Err(Error::NotAGraph(_))
    ));
}

fn arb_extents(n: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (
        prop::collection::vec(1i64..=4, n),
        prop::collection::vec(1i64..=4, n),
    )
}

fn arb_bc() -> impl Strategy<Value = BicomplexQ> {
    prop::array::uniform4(-5i64..=5).prop_map(|g| Bicomplex::from_real_basis(g.map(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extensions_stay_dominated(
        (ext, dir, value) in (1usize..=3).prop_flat_map(|n| (
            prop::array::uniform2(arb_extents(n)),
            prop::collection::vec((-3i64..=3, -3i64..=3), n),
            (-4i64..=4, -4i64..=4),
        ))
    ) {
        let n = dir.len();
        let boxes = ext.clone().map(|(lo, hi)| (lo.iter().map(|&v| q(-v)).collect::<Vec<_>>(), hi.iter().map(|&v| q(v)).collect::<Vec<_>>()));
        let b = DConvexSet::boxes(&boxes[0].0, &boxes[0].1, &boxes[1].0, &boxes[1].1, false).unwrap();
        let y = point(&dir);
        let mut g = DLinearFunctional::<Rational>::zero(n);
        let mut feasible = true;
        for c in Idem::BOTH {
            let yc = y.component(c);
            let Some(k) = yc.iter().position(|v| *v != q(0)) else { feasible = false; break };
            let v = match c { Idem::E1 => q(value.0), Idem::E2 => q(value.1) } / q(4);
            let coeff = v / yc[k].clone();
            let mut coeffs = vec![q(0); n];
            coeffs[k] = coeff;
            let (lo, hi) = &boxes[c.index()];
            let on_line = box_max(&coeffs, lo, hi) <= q(1);
            feasible &= on_line;
            let (mut f1, mut f2) = g.split();
            match c { Idem::E1 => f1 = coeffs, Idem::E2 => f2 = coeffs }
            g = DLinearFunctional::from_split(&f1, &f2).unwrap();
        }
        prop_assume!(feasible);
        let f = extend_dominated(&g, std::slice::from_ref(&y), &b, n).unwrap();
        prop_assert_eq!(f.eval(&y).unwrap(), g.eval(&y).unwrap());
        prop_assert!(dominated_on_boxes(&f, &boxes));
    }

    #[test]
    fn box_separation_matches_interval_disjointness(
        (a_ext, b_lo, b_len) in (1usize..=2).prop_flat_map(|n| (
            prop::array::uniform2(arb_extents(n)),
            prop::array::uniform2(prop::collection::vec(-6i64..=6, n)),
            prop::array::uniform2(prop::collection::vec(0i64..=3, n)),
        ))
    ) {
        let n = a_ext[0].0.len();
        let to = |v: &[i64], sign: i64| v.iter().map(|&x| q(sign * x)).collect::<Vec<_>>();
        let a = DConvexSet::boxes(&to(&a_ext[0].0, -1), &to(&a_ext[0].1, 1), &to(&a_ext[1].0, -1), &to(&a_ext[1].1, 1), true).unwrap();
        let b_hi: Vec<Vec<i64>> = (0..2).map(|c| (0..n).map(|i| b_lo[c][i] + b_len[c][i]).collect()).collect();
        let b = DConvexSet::new(
            RealPolytope::box_vertices(&to(&b_lo[0], 1), &to(&b_hi[0], 1)).unwrap(),
            RealPolytope::box_vertices(&to(&b_lo[1], 1), &to(&b_hi[1], 1)).unwrap(),
            false,
        ).unwrap();
        let disjoint = |c: usize| (0..n).any(|i| a_ext[c].1[i] <= b_lo[c][i] || b_hi[c][i] <= -a_ext[c].0[i]);
        match separate_hyperbolic(&a, &b) {
            Ok(cert) => {
                prop_assert!(disjoint(0) && disjoint(1));
                let (va1, va2) = a.vertices().unwrap();
                let (vb1, vb2) = b.vertices().unwrap();
                let dot = |f: &[Rational], v: &[Rational]| f.iter().zip(v).map(|(x, y)| x * y).fold(q(0), |s, t| s + t);
                let (f1, f2) = cert.f.split();
                for (f, va, vb, gamma) in [(&f1, &va1, &vb1, &cert.gamma.e1), (&f2, &va2, &vb2, &cert.gamma.e2)] {
                    prop_assert!(va.iter().all(|v| dot(f, v) <= *gamma));
                    prop_assert!(vb.iter().all(|v| dot(f, v) >= *gamma));
                    prop_assert!(dot(f, &vec![q(0); n]) < *gamma);
                }
            }
            Err(Error::NotDisjoint { component, .. }) => prop_assert!(!disjoint(component.index())),
            Err(e) => prop_assert!(false, "unexpected error {e:?}"),
        }
    }

    #[test]
    fn rescaled_hyperplanes_coincide(g in (1i64..=5, -5i64..=-1), c in (1i64..=5, 1i64..=5), s in (1i64..=4, -4i64..=-1), x in (-6i64..=6, -6i64..=6)) {
        let g = functional(&[g]);
        let (c, s) = (h(c.0, c.1), h(s.0, s.1));
        let l = hyperplane_normalize(&g, &c).unwrap();
        let scaled = hyperplane_normalize(&g.scale(&s), &(&s * &c)).unwrap();
        prop_assert!(l.same_set(&scaled).unwrap());
        let x = point(&[x]);
        prop_assert_eq!(l.contains(&x), g.eval(&x).unwrap() == c);
    }

    #[test]
    fn graphs_recover_their_maps(entries in prop::collection::vec(arb_bc(), 4), n in 1usize..=2) {
        let t = BCLinearMap::from_fn(n, n, |i, j| entries[i * 2 + j].clone());
        let basis: Vec<BCVector<Rational>> = (0..n).map(|k| {
            let u = BCVector((0..n).map(|i| if i == k { real(1, 1) } else { real(0, 0) }).collect());
            let v = t.apply(&u).unwrap();
            BCVector(u.0.into_iter().chain(v.0).collect())
        }).collect();
        prop_assert_eq!(map_from_graph(&basis, n).unwrap(), t);
    }
}
