mod common;

use proptest::prelude::*;

use common::{build_all, config, raw_polys, ring3};
use scmlab_core::ideal::Ideal;
use scmlab_core::residual::build_chain;

fn quadrics(raw: &[common::RawPoly]) -> Vec<common::RawPoly> {
    raw.iter().map(|(_, t)| (2, t.clone())).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn chains_are_residual_and_reproducible(raw in raw_polys(2..=4, 2, 4), seed in 0u64..1000, s in 1usize..=3) {
        let r = ring3();
        let ideal = Ideal::new(&r, build_all(&r, &quadrics(&raw))).unwrap();
        prop_assume!(!ideal.is_zero() && s <= ideal.mu());
        let Ok(chain) = build_chain(&ideal, s, seed) else {
            return Ok(());
        };
        for (i, h) in chain.heights.iter().enumerate() {
            prop_assert!(h.is_none_or(|h| h > i as i64));
        }
        prop_assert!(chain.recheck().unwrap());
        let again = build_chain(&ideal, s, seed).unwrap();
        prop_assert_eq!(&again.elements, &chain.elements);
        prop_assert_eq!(again.attempts, chain.attempts);
    }
}
