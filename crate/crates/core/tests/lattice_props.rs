mod common;

use std::cmp::Ordering;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use surreal_nf::{
    abs, in_cone, join, meet, mul, neg_part, pos_part, prec_compare, PrecOrdering, Surreal,
};

proptest! {
    #[test]
    fn cone_closure(a in cone_strategy(), b in cone_strategy(), l in 0i64..=9, m in 0i64..=9) {
        prop_assert!(in_cone(&(&a + &b)));
        prop_assert!(in_cone(&mul(&a, &b)));
        let comb = &a.scalar_mul(&q(l, 1)) + &b.scalar_mul(&q(m, 7));
        prop_assert!(in_cone(&comb));
    }

    #[test]
    fn cone_is_pointed(a in number_strategy()) {
        if in_cone(&a) && in_cone(&-a.clone()) {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn prec_is_a_partial_order(a in number_strategy(), b in number_strategy(), c in number_strategy()) {
        prop_assert_eq!(prec_compare(&a, &a), PrecOrdering::Equal);
        let ab = prec_compare(&a, &b);
        let ba = prec_compare(&b, &a);
        let flipped = match ab {
            PrecOrdering::Succ => PrecOrdering::Prec,
            PrecOrdering::Prec => PrecOrdering::Succ,
            other => other,
        };
        prop_assert_eq!(ba, flipped);
        // a ≻ b ⟹ a ≥ b
        if ab == PrecOrdering::Succ {
            prop_assert_eq!(a.cmp(&b), Ordering::Greater);
        }
        if prec_compare(&a, &b) == PrecOrdering::Succ && prec_compare(&b, &c) == PrecOrdering::Succ {
            prop_assert_eq!(prec_compare(&a, &c), PrecOrdering::Succ);
        }
        // A chain that is always comparable: a ⪰ a − |b| ⪰ a − |b| − |c|.
        let y = &a - &abs(&b);
        let z = &y - &abs(&c);
        prop_assert_ne!(prec_compare(&a, &y), PrecOrdering::Prec);
        prop_assert_ne!(prec_compare(&y, &z), PrecOrdering::Prec);
        if !b.is_zero() || !c.is_zero() {
            prop_assert_eq!(prec_compare(&a, &z), PrecOrdering::Succ);
        }
    }

    #[test]
    fn lattice_laws(a in number_strategy(), b in number_strategy(), c in number_strategy()) {
        prop_assert_eq!(join(&a, &b), join(&b, &a));
        prop_assert_eq!(meet(&a, &b), meet(&b, &a));
        prop_assert_eq!(join(&join(&a, &b), &c), join(&a, &join(&b, &c)));
        prop_assert_eq!(meet(&meet(&a, &b), &c), meet(&a, &meet(&b, &c)));
        prop_assert_eq!(join(&a, &a), a.clone());
        prop_assert_eq!(meet(&a, &a), a.clone());
        prop_assert_eq!(join(&a, &meet(&a, &b)), a.clone());
        prop_assert_eq!(meet(&a, &join(&a, &b)), a.clone());
        prop_assert_eq!(abs(&a), join(&a, &-a.clone()));
        prop_assert_eq!(&join(&a, &b) + &meet(&a, &b), &a + &b);
        prop_assert!(in_cone(&(&join(&a, &b) - &a)));
        prop_assert!(in_cone(&(&a - &meet(&a, &b))));
    }

    #[test]
    fn parts(a in number_strategy()) {
        prop_assert_eq!(&pos_part(&a) - &neg_part(&a), a.clone());
        prop_assert_eq!(&pos_part(&a) + &neg_part(&a), abs(&a));
        prop_assert!(in_cone(&pos_part(&a)) && in_cone(&neg_part(&a)));
        prop_assert_eq!(meet(&pos_part(&a), &neg_part(&a)), Surreal::zero());
    }

    #[test]
    fn triangle_inequalities(a in number_strategy(), b in number_strategy()) {
        let s = abs(&(&a + &b));
        let upper = &(&abs(&a) + &abs(&b)) - &s;
        let lower = &s - &(&abs(&a) - &abs(&b));
        prop_assert!(in_cone(&upper));
        prop_assert!(in_cone(&lower));
        prop_assert!(s <= &abs(&a) + &abs(&b));
        prop_assert!(&abs(&a) - &abs(&b) <= s);
    }
}

#[test]
fn pinned_values() {
    let w = Surreal::omega();
    assert_eq!(abs(&(&w - &int(1))), &w + &int(1));
    assert_eq!(join(&(&w - &int(1)), &(&int(1) - &w)), &w + &int(1));
    assert_eq!(join(&int(0), &(&w - &int(1))), w);
}
