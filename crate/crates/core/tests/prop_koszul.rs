mod common;

use proptest::prelude::*;

use common::{build, build_all, config, raw_polys, ring3};
use scmlab_core::corpus::{corpus_ideal, CORPUS};
use scmlab_core::homology::{module_invariants, DepthStrategy};
use scmlab_core::ideal::Ideal;
use scmlab_core::koszul::{koszul_homology, verify_theorem24, KoszulComplex, KoszulOptions, Theorem24Options};
use scmlab_core::Zp;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn koszul_complexes_square_to_zero(raw in raw_polys(1..=5, 3, 3)) {
        let r = ring3();
        let gens = build_all(&r, &raw);
        let k = KoszulComplex::new(&r, &gens).unwrap();
        prop_assert!(k.is_complex());
    }

    #[test]
    fn h0_and_grade_sensitivity(raw in raw_polys(1..=4, 2, 3)) {
        let r = ring3();
        let ideal = Ideal::new(&r, build_all(&r, &raw)).unwrap();
        prop_assume!(!ideal.is_zero());
        // errors on an H_0 mismatch or on nonzero homology above n - g
        let rep = koszul_homology(&ideal, &KoszulOptions::default()).unwrap();
        prop_assert!(rep.h0_matches_quotient);
        prop_assert_eq!(rep.vanishing_above_n_minus_g, Some(true));
        let k = KoszulComplex::new(&r, ideal.mingens()).unwrap();
        prop_assert_eq!(k.homology(0).unwrap().hilbert_series(), ideal.quotient_hilbert().clone());
        for i in (rep.n as i64 - rep.g + 1).max(0) as usize..=rep.n {
            prop_assert!(k.homology(i).unwrap().is_zero());
        }
    }

    #[test]
    fn invariants_ignore_the_generating_set(raw in raw_polys(1..=3, 2, 3), mult in raw_polys(3..=3, 1, 3)) {
        let r = ring3();
        let ideal = Ideal::new(&r, build_all(&r, &raw)).unwrap();
        prop_assume!(!ideal.is_zero());
        let gens = ideal.mingens().to_vec();
        // another minimal generating set: add multiples of earlier generators
        let mut other = gens.clone();
        for i in 1..other.len() {
            let (di, d0) = (gens[i].degree().unwrap(), gens[0].degree().unwrap());
            if di > d0 {
                let m = build(&r, &(di - d0, mult[i].1.clone()));
                other[i] = &other[i] + &(&m * &gens[0]);
            } else if di == d0 {
                other[i] = &other[i] + &gens[0];
            }
        }
        other.reverse();
        let profile = |g: &[scmlab_core::Polynomial<Zp>]| {
            let k = KoszulComplex::new(&r, g).unwrap();
            let mut out: Vec<(i64, Option<i64>)> = (0..=k.len())
                .map(|i| {
                    let inv = module_invariants(&k.homology(i).unwrap(), DepthStrategy::Resolution, 0).unwrap();
                    (if inv.zero { -1 } else { inv.dim }, inv.depth)
                })
                .collect();
            out.sort();
            out
        };
        prop_assert_eq!(profile(&gens), profile(&other));
    }
}

#[test]
fn corpus_never_separates_the_two_sides() {
    for entry in CORPUS {
        let ideal = corpus_ideal(Zp::default(), entry).unwrap();
        // a disagreement under the hypotheses is reported as an invariant error
        let rep = verify_theorem24(&ideal, &Theorem24Options::default()).unwrap();
        if rep.hypotheses.all_pass {
            assert_eq!(rep.side_a, rep.side_b, "{}", entry.name);
        }
        // with the depth conditions as well, symmetric and ordinary powers agree up to ell - g + 1
        if rep.hypotheses.all_pass && rep.side_b == Some(true) {
            assert!(rep.syzygetic.as_ref().is_some_and(|s| s.holds), "{}", entry.name);
        }
    }
}
