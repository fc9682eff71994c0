use bicomplex::linear::DVector;
use bicomplex::metric::{
    baire_witness, check_cover, dmetric, dmetric_sq, metric_triangle_holds, DBall, RectSet,
};
use bicomplex::{Error, Hyperbolic, HyperbolicQ, Rational, Real};
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

fn rect(a: (i64, i64), b: (i64, i64)) -> RectSet<Rational> {
    RectSet::new((q(a.0), q(a.1)), (q(b.0), q(b.1))).unwrap()
}

fn arb_point(n: usize) -> impl Strategy<Value = DVector<Rational>> {
    prop::collection::vec((-30i64..=30, -30i64..=30), n)
        .prop_map(|v| DVector(v.into_iter().map(|(a, b)| h(a, b)).collect()))
}

/// Open ball of `D` inside a closed rectangle, by endpoint comparison.
fn ball_in_rect(ball: &DBall<Rational>, rect: &RectSet<Rational>) -> bool {
    let x = &ball.center.0[0];
    let fits = |m: &Rational, rad: &Rational, (lo, hi): &(Rational, Rational)| {
        lo <= &(m - rad) && &(m + rad) <= hi
    };
    fits(&x.e1, &ball.radius.e1, &rect.c1) && fits(&x.e2, &ball.radius.e2, &rect.c2)
}

#[test]
fn distance_is_componentwise() {
    let origin = DVector(vec![h(0, 0)]);
    let p = DVector(vec![h(3, 4)]);
    assert_eq!(dmetric(&origin, &p).unwrap(), h(3, 4));
    assert_eq!(dmetric(&p, &p).unwrap(), h(0, 0));
    let planar = DVector(vec![h(3, 0), h(4, 5)]);
    assert_eq!(
        dmetric(&DVector(vec![h(0, 0), h(0, 0)]), &planar).unwrap(),
        h(5, 5)
    );
    assert!(matches!(
        dmetric_sq(&origin, &planar),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn balls_are_strict_in_both_components() {
    let ball = DBall::new(DVector(vec![h(0, 0)]), h(1, 2)).unwrap();
    assert!(ball.contains(&ball.center));
    assert!(ball.contains(&DVector(vec![Hyperbolic::new(r(1, 2), r(3, 2))])));
    assert!(!ball.contains(&DVector(vec![h(1, 0)])));
    assert!(!ball.contains(&DVector(vec![h(0, -2)])));
    assert_eq!(
        DBall::new(DVector(vec![h(0, 0)]), h(1, 0)),
        Err(Error::NonPositiveBound)
    );
}

#[test]
fn quadrant_cover_has_a_ball() {
    let bbox = rect((-1, 1), (-1, 1));
    let cover = [
        rect((-1, 0), (-1, 0)),
        rect((0, 1), (-1, 0)),
        rect((-1, 0), (0, 1)),
        rect((0, 1), (0, 1)),
    ];
    let witness = baire_witness(&bbox, &cover).unwrap();
    assert!(ball_in_rect(&witness.ball, &cover[witness.index]));
    let quarter = Hyperbolic::new(r(1, 4), r(1, 4));
    let center = Hyperbolic::new(r(1, 2), r(-1, 2));
    assert!(ball_in_rect(
        &DBall::new(DVector(vec![center]), quarter).unwrap(),
        &cover[1]
    ));
}

#[test]
fn single_set_cover() {
    let bbox = rect((0, 4), (0, 2));
    let witness = baire_witness(&bbox, std::slice::from_ref(&bbox)).unwrap();
    assert_eq!(witness.index, 0);
    assert!(ball_in_rect(&witness.ball, &bbox));
}

#[test]
fn gap_is_reported() {
    let bbox = rect((-1, 1), (-1, 1));
    let cover = [
        RectSet::new((q(-1), q(0)), (q(-1), q(1))).unwrap(),
        RectSet::new((r(1, 2), q(1)), (q(-1), q(1))).unwrap(),
    ];
    let err = baire_witness(&bbox, &cover).unwrap_err();
    let Error::NotACover(x, _) = err else {
        panic!("expected NotACover, got {err:?}")
    };
    let x: f64 = x
        .split('/')
        .map(|s| s.parse::<f64>().unwrap())
        .reduce(|a, b| a / b)
        .unwrap();
    assert!(0.0 < x && x < 0.5);
    assert!(check_cover(&bbox, &cover[..1]).is_err());
}

proptest! {
    #[test]
    fn triangle_inequality((x, y, z) in (1usize..=3).prop_flat_map(|n| (arb_point(n), arb_point(n), arb_point(n)))) {
        prop_assert!(metric_triangle_holds(&x, &y, &z).unwrap());
        let d = |a: &DVector<Rational>, b: &DVector<Rational>| dmetric_sq(a, b).unwrap().map(|v| v.to_f64().sqrt());
        let (xz, xy, yz) = (d(&x, &z), d(&x, &y), d(&y, &z));
        prop_assert!(xz.e1 <= xy.e1 + yz.e1 + 1e-9 && xz.e2 <= xy.e2 + yz.e2 + 1e-9);
        prop_assert_eq!(dmetric_sq(&x, &y).unwrap(), dmetric_sq(&y, &x).unwrap());
    }

    #[test]
    fn grid_covers_yield_contained_balls(cut1 in -9i64..=9, cut2 in -9i64..=9, overlap in 0i64..=3) {
        let bbox = rect((-10, 10), (-10, 10));
        let cover = [
            rect((-10, cut1 + overlap), (-10, 10)),
            rect((cut1, 10), (-10, cut2 + overlap)),
            rect((cut1, 10), (cut2, 10)),
        ];
        let witness = baire_witness(&bbox, &cover).unwrap();
        prop_assert!(ball_in_rect(&witness.ball, &cover[witness.index]));
        prop_assert!(witness.ball.radius.is_positive());
    }

    #[test]
    fn removing_a_strip_breaks_the_cover(cut in -9i64..=8) {
        let bbox = rect((-10, 10), (-10, 10));
        let cover = [rect((-10, cut), (-10, 10)), rect((cut + 1, 10), (-10, 10))];
        prop_assert!(matches!(baire_witness(&bbox, &cover), Err(Error::NotACover(..))));
    }
}
