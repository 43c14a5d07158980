mod common;

use std::cmp::Ordering;

use proptest::prelude::*;

use common::{build, config, raw_poly, ring3};
use scmlab_core::order::MonomialOrder;
use scmlab_core::parse::parse_poly;
use scmlab_core::{mk_ring, Field, Grading, Polynomial};

fn exps() -> impl Strategy<Value = [u16; 3]> {
    prop::array::uniform3(0u16..5)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms(a in raw_poly(3, 4), b in raw_poly(3, 4), c in raw_poly(3, 4)) {
        let r = ring3();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        let p = r.field().from_i64(32003);
        prop_assert!(a.scalar_mul(&p).is_zero());
    }

    #[test]
    fn monomial_orders_are_multiplicative(a in exps(), b in exps(), m in exps()) {
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::elimination(1, 3)] {
            let r = mk_ring(scmlab_core::Zp::default(), &["x", "y", "z"], Grading::Standard, order).unwrap();
            let (a, b, m) = (r.mono(&a), r.mono(&b), r.mono(&m));
            let ab = r.cmp(&a, &b);
            prop_assert_eq!(ab, r.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(r.cmp(&a.mul(&m), &b.mul(&m)), ab);
            prop_assert_ne!(r.cmp(&a, &r.mono(&[0, 0, 0])), Ordering::Less);
        }
    }

    #[test]
    fn print_parse_round_trip(a in raw_poly(4, 5)) {
        let r = ring3();
        let f = build(&r, &a);
        let text = f.to_string();
        let g: Polynomial<_> = parse_poly(&r, &text).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_string(), text);
        prop_assert_eq!(parse_poly(&r, &f.to_canonical_string()).unwrap(), f);
    }
}
