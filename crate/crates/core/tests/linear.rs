use bicomplex::convex::DConvexSet;
use bicomplex::linear::{
    hyperbolic_part, hyperbolic_part_via, image_convex, operator_dnorm, reconstruct,
    reconstruct_eval, Axis, BCLinearFunctional, BCLinearMap, BCVector, DLinearFunctional, DVector,
    FunctionalForm,
};
use bicomplex::{Bicomplex, BicomplexQ, Error, Hyperbolic, HyperbolicQ, Idem, Rational, Real};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn h(a: i64, b: i64) -> HyperbolicQ {
    Hyperbolic::from_ints(a, b)
}

fn bc(g: [i64; 4]) -> BicomplexQ {
    Bicomplex::from_real_basis(g.map(q))
}

fn arb_bc_vec(n: usize) -> impl Strategy<Value = BCVector<Rational>> {
    prop::collection::vec(prop::array::uniform4(-9i64..=9), n)
        .prop_map(|v| BCVector(v.into_iter().map(bc).collect()))
}

fn arb_bc_functional() -> impl Strategy<Value = BCLinearFunctional<Rational>> {
    (1usize..=3)
        .prop_flat_map(arb_bc_vec)
        .prop_map(BCLinearFunctional::new)
}

fn arb_functional_and_point(
) -> impl Strategy<Value = (BCLinearFunctional<Rational>, BCVector<Rational>)> {
    (1usize..=3).prop_flat_map(|n| {
        (
            arb_bc_vec(n).prop_map(BCLinearFunctional::new),
            arb_bc_vec(n),
        )
    })
}

fn arb_d_vec(n: usize) -> impl Strategy<Value = DVector<Rational>> {
    prop::collection::vec((-9i64..=9, -9i64..=9), n)
        .prop_map(|v| DVector(v.into_iter().map(|(a, b)| h(a, b)).collect()))
}

#[test]
fn coefficient_split() {
    let f = DLinearFunctional::new(DVector(vec![h(1, 4), h(-2, 0)]));
    assert_eq!(f.split(), (vec![q(1), q(-2)], vec![q(4), q(0)]));
    assert_eq!(
        DLinearFunctional::from_split(&f.split().0, &f.split().1).unwrap(),
        f
    );
}

#[test]
fn hyperbolic_part_of_the_identity() {
    let id = BCLinearFunctional::new(BCVector(vec![bc([1, 0, 0, 0])]));
    let x = BCVector(vec![bc([1, 2, 3, 4])]);
    let value = hyperbolic_part(&id).eval_on_bc(&x).unwrap();
    assert_eq!(value, Hyperbolic::from_standard(q(1), q(4)));
    assert_eq!(value, h(5, -3));
}

#[test]
fn zero_functional_reconstructs_to_zero() {
    let zero = DLinearFunctional::<Rational>::zero(4);
    for axis in [Axis::I, Axis::J] {
        assert_eq!(
            reconstruct(&zero, axis).unwrap(),
            BCLinearFunctional::zero(2)
        );
    }
    assert!(matches!(
        reconstruct(&DLinearFunctional::<Rational>::zero(3), Axis::I),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn diagonal_operator_norm() {
    let t = BCLinearMap::diagonal(&[Bicomplex::<Rational>::from_hyperbolic(&h(2, 3))]);
    assert_eq!(operator_dnorm(&t), Hyperbolic::new(2.0, 3.0));
    assert_eq!(
        operator_dnorm(&BCLinearMap::<Rational>::identity(2)),
        Hyperbolic::new(1.0, 1.0)
    );
    assert_eq!(
        operator_dnorm(&BCLinearMap::<Rational>::zero(2, 2)),
        Hyperbolic::new(0.0, 0.0)
    );
}

#[test]
fn image_of_an_open_box() {
    let a = DConvexSet::cube(1, &q(1), true);
    let image = image_convex(&DLinearFunctional::new(DVector(vec![h(2, 3)])), &a).unwrap();
    assert_eq!(
        (image.c1.lo.clone(), image.c1.hi.clone()),
        (Some(q(-2)), Some(q(2)))
    );
    assert_eq!(
        (image.c2.lo.clone(), image.c2.hi.clone()),
        (Some(q(-3)), Some(q(3)))
    );
    assert!(image.c1.open && image.c2.open);
    assert!(!image.c1.contains(&q(2)) && image.c1.contains(&q(1)));
    let flat = DLinearFunctional::new(DVector(vec![h(0, 1)]));
    assert_eq!(
        image_convex(&flat, &a),
        Err(Error::ConstantComponent(Idem::E1))
    );
}

proptest! {
    #[test]
    fn direct_equals_split_evaluation((f, x) in (1usize..=4).prop_flat_map(|n| (arb_d_vec(n), arb_d_vec(n)))) {
        let f = DLinearFunctional::new(f);
        let (f1, f2) = f.split();
        let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).map(|(p, r)| p * r).fold(q(0), |s, t| s + t);
        let expected = Hyperbolic::new(dot(&f1, &x.component(Idem::E1)), dot(&f2, &x.component(Idem::E2)));
        prop_assert_eq!(f.eval(&x).unwrap(), expected.clone());
        prop_assert_eq!(f.eval_split(&x).unwrap(), expected);
    }

    #[test]
    fn every_form_gives_the_same_hyperbolic_part(hf in arb_bc_functional()) {
        let reference = hyperbolic_part(&hf);
        for form in FunctionalForm::ALL {
            prop_assert_eq!(hyperbolic_part_via(&hf, form), reference.clone());
        }
    }

    #[test]
    fn hyperbolic_part_is_the_real_part_of_values((hf, x) in arb_functional_and_point()) {
        let value = hf.eval(&x).unwrap();
        prop_assert_eq!(hyperbolic_part(&hf).eval_on_bc(&x).unwrap(), value.hyperbolic_part());
    }

    #[test]
    fn reconstruction_round_trips((hf, x) in arb_functional_and_point()) {
        let f = hyperbolic_part(&hf);
        let value = hf.eval(&x).unwrap();
        for axis in [Axis::I, Axis::J] {
            prop_assert_eq!(reconstruct(&f, axis).unwrap(), hf.clone());
            prop_assert_eq!(reconstruct_eval(&f, axis, &x).unwrap(), value.clone());
        }
    }
}
