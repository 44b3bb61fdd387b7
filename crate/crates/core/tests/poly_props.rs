use proptest::prelude::*;

use qalt::poly::{HalfLaurent, IntLaurent, TLaurent};

fn poly() -> impl Strategy<Value = IntLaurent> {
    prop::collection::vec((-6i64..=6, -50i64..=50), 0..6).prop_map(IntLaurent::from_terms)
}

fn big_coeff_poly() -> impl Strategy<Value = IntLaurent> {
    prop::collection::vec((-3i64..=3, any::<i64>()), 0..4).prop_map(IntLaurent::from_terms)
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &IntLaurent::one(), a.clone());
    }

    #[test]
    fn no_overflow(a in big_coeff_poly(), b in big_coeff_poly()) {
        let p = &a * &b;
        prop_assert_eq!(&(&p - &(&a * &b)), &IntLaurent::zero());
        prop_assert_eq!(p.pow(2), &p * &p);
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let back: IntLaurent = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn degrees_add(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.degree(), a.degree() + b.degree());
        prop_assert_eq!(p.low_degree().unwrap(), a.low_degree().unwrap() + b.low_degree().unwrap());
    }

    #[test]
    fn half_round_trip(a in poly()) {
        let t: TLaurent = a.rename();
        let h = HalfLaurent::from_t(&t);
        prop_assert_eq!(h.to_t().unwrap(), t);
        let v = h.eval_at_s_equals_i();
        prop_assert_eq!(v.axis_abs().unwrap(), a.eval_unit(-1).unwrap().abs());
    }
}
