use bicomplex::order::{compare, inf_d, is_d_bounded, le, lt_strict, sup_d, OrderResult};
use bicomplex::{Error, Hyperbolic, HyperbolicQ};
use proptest::prelude::*;

fn h(a: i64, b: i64) -> HyperbolicQ {
    Hyperbolic::from_ints(a, b)
}

fn arb_h() -> impl Strategy<Value = HyperbolicQ> {
    (-6i64..=6, -6i64..=6).prop_map(|(a, b)| h(a, b))
}

#[test]
fn idempotents_are_ordered_but_not_strictly() {
    assert_eq!(compare(&h(0, 0), &h(1, 0)), OrderResult::Less);
    assert!(!lt_strict(&h(0, 0), &h(1, 0)));
    assert_eq!(compare(&h(1, 0), &h(0, 1)), OrderResult::Incomparable);
    assert_eq!(compare(&h(2, 2), &h(2, 2)), OrderResult::Equal);
    assert_eq!(compare(&h(3, 5), &h(2, 2)), OrderResult::Greater);
}

#[test]
fn suprema_and_infima() {
    let set = [h(1, 5), h(3, 2)];
    assert_eq!(sup_d(&set).unwrap(), h(3, 5));
    assert_eq!(inf_d(&set).unwrap(), h(1, 2));
    assert_eq!(sup_d::<bicomplex::Rational>(&[]), Err(Error::EmptySet));
}

#[test]
fn boundedness() {
    assert!(!is_d_bounded(&[h(3, 0)], &h(2, 2)).unwrap());
    assert!(is_d_bounded(&[h(1, -1), h(-1, 1)], &h(2, 2)).unwrap());
    assert_eq!(
        is_d_bounded(&[h(0, 0)], &h(1, 0)),
        Err(Error::NonPositiveBound)
    );
}

proptest! {
    #[test]
    fn partial_order_axioms(a in arb_h(), b in arb_h(), c in arb_h()) {
        prop_assert!(le(&a, &a));
        if le(&a, &b) && le(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
    }

    #[test]
    fn compare_agrees_with_components(a in arb_h(), b in arb_h()) {
        let expected = match (a.e1.cmp(&b.e1), a.e2.cmp(&b.e2)) {
            (std::cmp::Ordering::Equal, std::cmp::Ordering::Equal) => OrderResult::Equal,
            (x, y) if x.is_le() && y.is_le() => OrderResult::Less,
            (x, y) if x.is_ge() && y.is_ge() => OrderResult::Greater,
            _ => OrderResult::Incomparable,
        };
        prop_assert_eq!(compare(&a, &b), expected);
        prop_assert_eq!(lt_strict(&a, &b), a.e1 < b.e1 && a.e2 < b.e2);
    }

    #[test]
    fn order_is_compatible_with_addition(a in arb_h(), b in arb_h(), c in arb_h()) {
        prop_assert_eq!(le(&a, &b), le(&(&a + &c), &(&b + &c)));
    }

    #[test]
    fn sup_of_union_is_sup_of_sups(xs in prop::collection::vec(arb_h(), 1..6), ys in prop::collection::vec(arb_h(), 1..6)) {
        let union: Vec<_> = xs.iter().chain(&ys).cloned().collect();
        let nested = sup_d(&[sup_d(&xs).unwrap(), sup_d(&ys).unwrap()]).unwrap();
        prop_assert_eq!(sup_d(&union).unwrap(), nested);
        let s = sup_d(&union).unwrap();
        let i = inf_d(&union).unwrap();
        for x in &union {
            prop_assert!(le(x, &s) && le(&i, x));
        }
    }
}
