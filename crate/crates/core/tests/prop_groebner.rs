mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{build_all, config, raw_polys, ring3};
use scmlab_core::groebner::{
    buchberger_violation, groebner_basis, is_reduced, module_gb, naive_reduce, poly_syzygies, GbOptions, ModuleCtx,
};
use scmlab_core::Polynomial;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn reduced_basis_is_independent_of_input_order(raw in raw_polys(1..=4, 3, 4), seed in 0u64..1000) {
        let r = ring3();
        let gens = build_all(&r, &raw);
        let a = groebner_basis(&r, &gens).unwrap();
        let mut shuffled = gens.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        let b = groebner_basis(&r, &shuffled).unwrap();
        prop_assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn every_s_polynomial_reduces_to_zero(raw in raw_polys(1..=4, 3, 4)) {
        let r = ring3();
        let gb = groebner_basis(&r, &build_all(&r, &raw)).unwrap();
        prop_assert!(gb.buchberger_violation().is_none());
        // independent check with the naive reducer
        let ctx = ModuleCtx::ideal(&r);
        let basis: Vec<_> = gb.generators().iter().map(ModuleCtx::from_poly).collect();
        prop_assert!(buchberger_violation(&ctx, &basis).is_none());
        prop_assert!(is_reduced(&ctx, &basis));
    }

    #[test]
    fn membership_is_sound(raw in raw_polys(1..=3, 3, 3), mult in raw_polys(3..=3, 2, 3)) {
        let r = ring3();
        let gens = build_all(&r, &raw);
        prop_assume!(!gens.is_empty());
        let gb = groebner_basis(&r, &gens).unwrap();
        let mults = build_all(&r, &mult);
        let mut f = Polynomial::zero(&r);
        for (g, m) in gens.iter().zip(mults.iter()) {
            f = &f + &(g * m);
        }
        prop_assert!(gb.normal_form(&f).unwrap().is_zero());
        let ctx = ModuleCtx::ideal(&r);
        let basis: Vec<_> = gb.generators().iter().map(ModuleCtx::from_poly).collect();
        prop_assert!(naive_reduce(&ctx, &ModuleCtx::from_poly(&f), &basis).is_empty());
        // the homogeneous generators span a proper ideal
        prop_assert!(!gb.normal_form(&Polynomial::one(&r)).unwrap().is_zero());
    }

    #[test]
    fn syzygies_annihilate_the_generators(raw in raw_polys(1..=4, 2, 3)) {
        let r = ring3();
        let gens = build_all(&r, &raw);
        prop_assume!(!gens.is_empty());
        let syz = poly_syzygies(&r, &gens).unwrap();
        for s in &syz {
            let mut total = Polynomial::zero(&r);
            for (c, g) in s.iter().zip(&gens) {
                total = &total + &(c * g);
            }
            prop_assert!(total.is_zero());
        }
        // every Koszul relation lies in the computed syzygy module
        let twists: Vec<i64> = gens.iter().map(|g| g.degree().unwrap() as i64).collect();
        let ctx = ModuleCtx::free(&r, twists);
        let cols: Vec<_> = syz.iter().map(|s| ctx.from_components(s)).collect();
        let gb = module_gb(&ctx, &cols, &GbOptions::default());
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let mut v = vec![Polynomial::zero(&r); gens.len()];
                v[i] = gens[j].clone();
                v[j] = -&gens[i];
                prop_assert!(gb.contains(&ctx.from_components(&v)));
            }
        }
    }
}
