//! The partial order `≤'` on `D`, its strict form `<'`, and finite
//! `D`-suprema and infima.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{Hyperbolic, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Compares two hyperbolic numbers under `≤'`.
///
/// `Less` means `α ≤' γ` and `α ≠ γ`; it does not imply `α <' γ`, for which
/// see [`lt_strict`].
pub fn compare<T: Real>(alpha: &Hyperbolic<T>, gamma: &Hyperbolic<T>) -> OrderResult {
    match (alpha.e1.cmp_tol(&gamma.e1), alpha.e2.cmp_tol(&gamma.e2)) {
        (Ordering::Equal, Ordering::Equal) => OrderResult::Equal,
        (Ordering::Less | Ordering::Equal, Ordering::Less | Ordering::Equal) => OrderResult::Less,
        (Ordering::Greater | Ordering::Equal, Ordering::Greater | Ordering::Equal) => {
            OrderResult::Greater
        }
        _ => OrderResult::Incomparable,
    }
}

/// `α ≤' γ`, i.e. `γ - α ∈ D⁺`.
pub fn le<T: Real>(alpha: &Hyperbolic<T>, gamma: &Hyperbolic<T>) -> bool {
    alpha.e1.le_tol(&gamma.e1) && alpha.e2.le_tol(&gamma.e2)
}

/// `α <' γ`: strict in both idempotent components.
pub fn lt_strict<T: Real>(alpha: &Hyperbolic<T>, gamma: &Hyperbolic<T>) -> bool {
    alpha.e1.lt_tol(&gamma.e1) && alpha.e2.lt_tol(&gamma.e2)
}

fn fold_components<T: Real>(
    set: &[Hyperbolic<T>],
    pick: impl Fn(T, T) -> T,
) -> Result<Hyperbolic<T>> {
    let (first, rest) = set.split_first().ok_or(Error::EmptySet)?;
    Ok(rest.iter().fold(first.clone(), |acc, x| {
        Hyperbolic::new(pick(acc.e1, x.e1.clone()), pick(acc.e2, x.e2.clone()))
    }))
}

/// `sup_D A = e1 sup A1 + e2 sup A2`.
pub fn sup_d<T: Real>(set: &[Hyperbolic<T>]) -> Result<Hyperbolic<T>> {
    fold_components(set, T::max_of)
}

/// `inf_D A = e1 inf A1 + e2 inf A2`.
pub fn inf_d<T: Real>(set: &[Hyperbolic<T>]) -> Result<Hyperbolic<T>> {
    fold_components(set, T::min_of)
}

/// Checks that every element satisfies `|α|_k <' bound`. Requires
/// `bound >' 0`; the empty set is vacuously bounded.
pub fn is_d_bounded<T: Real>(set: &[Hyperbolic<T>], bound: &Hyperbolic<T>) -> Result<bool> {
    if !bound.is_positive() {
        return Err(Error::NonPositiveBound);
    }
    Ok(set.iter().all(|a| lt_strict(&a.abs(), bound)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    type H = Hyperbolic<Rational>;

    fn h(a: i64, b: i64) -> H {
        H::from_ints(a, b)
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&h(0, 0), &H::unit_e1()), OrderResult::Less);
        assert!(!lt_strict(&h(0, 0), &H::unit_e1()));
        assert_eq!(
            compare(&H::unit_e1(), &H::unit_e2()),
            OrderResult::Incomparable
        );
        assert_eq!(compare(&h(3, -2), &h(3, -2)), OrderResult::Equal);
        assert_eq!(compare(&h(4, 1), &h(3, 1)), OrderResult::Greater);
    }

    #[test]
    fn sup_inf_examples() {
        let set = [h(1, 5), h(3, 2)];
        assert_eq!(sup_d(&set).unwrap(), h(3, 5));
        assert_eq!(inf_d(&set).unwrap(), h(1, 2));
        assert_eq!(sup_d(&[h(7, -1)]).unwrap(), h(7, -1));
        assert_eq!(inf_d(&[h(7, -1)]).unwrap(), h(7, -1));
        assert_eq!(sup_d::<Rational>(&[]), Err(Error::EmptySet));
        assert_eq!(inf_d::<Rational>(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn bounded_examples() {
        assert!(is_d_bounded(&[h(1, 1)], &h(2, 2)).unwrap());
        assert!(!is_d_bounded(
            &[H::new(Rational::from_i64(3), Rational::from_i64(0))],
            &h(2, 2)
        )
        .unwrap());
        assert!(is_d_bounded(&[], &h(2, 2)).unwrap());
        assert_eq!(
            is_d_bounded(&[h(0, 0)], &h(2, 0)),
            Err(Error::NonPositiveBound)
        );
    }

    #[test]
    fn float_ties_within_tolerance() {
        let a = Hyperbolic::new(1.0, 2.0);
        let b = Hyperbolic::new(1.0 + 1e-12, 2.0 - 1e-12);
        assert_eq!(compare(&a, &b), OrderResult::Equal);
        assert!(!lt_strict(&a, &b));
    }

    fn arb_h() -> impl Strategy<Value = H> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| h(a, b))
    }

    proptest! {
        #[test]
        fn partial_order_laws(a in arb_h(), b in arb_h(), c in arb_h()) {
            prop_assert!(le(&a, &a));
            if le(&a, &b) && le(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            if le(&a, &b) && le(&b, &c) {
                prop_assert!(le(&a, &c));
            }
        }

        #[test]
        fn sup_is_least_upper_bound(set in prop::collection::vec(arb_h(), 1..8), u in arb_h()) {
            let s = sup_d(&set).unwrap();
            prop_assert!(set.iter().all(|x| le(x, &s)));
            if set.iter().all(|x| le(x, &u)) {
                prop_assert!(le(&s, &u));
            }
            prop_assert!(le(&inf_d(&set).unwrap(), &s));
        }

        #[test]
        fn sup_of_union(a in prop::collection::vec(arb_h(), 1..6), b in prop::collection::vec(arb_h(), 1..6)) {
            let mut both = a.clone();
            both.extend(b.iter().cloned());
            let nested = sup_d(&[sup_d(&a).unwrap(), sup_d(&b).unwrap()]).unwrap();
            prop_assert_eq!(sup_d(&both).unwrap(), nested);
        }

        #[test]
        fn monotone_under_positive_scaling(a in arb_h(), b in arb_h(), l1 in 0i64..20, l2 in 0i64..20) {
            let lambda = h(l1, l2);
            if le(&a, &b) {
                prop_assert!(le(&(&lambda * &a), &(&lambda * &b)));
            }
        }
    }
}
