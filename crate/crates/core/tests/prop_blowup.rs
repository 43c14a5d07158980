mod common;

use proptest::prelude::*;

use common::{build_all, config, raw_polys, ring3};
use scmlab_core::blowup::{
    analytic_spread, analytic_spread_equigenerated, minimal_reduction, rees_ideal, syzygetic_range, ReesOptions,
};
use scmlab_core::ideal::Ideal;
use scmlab_core::order::MonomialOrder;
use scmlab_core::{mk_ring, Grading, Polynomial, Zp};

fn equigenerated(raw: &[common::RawPoly], d: u32) -> Vec<common::RawPoly> {
    raw.iter().map(|(_, t)| (d, t.clone())).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rees_equations_vanish_on_the_rees_algebra(raw in raw_polys(1..=3, 2, 3)) {
        let r = ring3();
        let ideal = Ideal::new(&r, build_all(&r, &raw)).unwrap();
        prop_assume!(!ideal.is_zero());
        let p = rees_ideal(&ideal, &ReesOptions::default()).unwrap();
        prop_assert!(p.complete);
        let s = mk_ring(Zp::default(), &["x", "y", "z", "t"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let t = Polynomial::var(&s, 3);
        let mut images: Vec<Polynomial<Zp>> = (0..3).map(|i| Polynomial::var(&s, i)).collect();
        for a in p.base.gens() {
            images.push(&a.rename_into(&s, &[0, 1, 2]) * &t);
        }
        for q in p.q.gens() {
            prop_assert!(q.substitute(&s, &images).unwrap().is_zero());
        }
        prop_assert!(p.q1.is_subset_of(&p.q).unwrap());
        let linear_type = p.is_linear_type().unwrap();
        let top = p.min_gen_bidegrees.iter().map(|b| b.1).max().unwrap_or(1).max(1);
        prop_assert_eq!(syzygetic_range(&p, top).unwrap().holds, linear_type);
        let ell = analytic_spread(&p).unwrap() as i64;
        prop_assert!(ideal.height().unwrap() <= ell && ell <= 3);
        if ideal.equigenerated_degree().is_some() {
            prop_assert_eq!(analytic_spread_equigenerated(&ideal).unwrap() as i64, ell);
        }
    }

    #[test]
    fn reduction_certificates(raw in raw_polys(2..=4, 2, 3), seed in 0u64..1000) {
        let r = ring3();
        let ideal = Ideal::new(&r, build_all(&r, &equigenerated(&raw, 2))).unwrap();
        prop_assume!(!ideal.is_zero());
        let ell = analytic_spread_equigenerated(&ideal).unwrap();
        let cert = minimal_reduction(&ideal, ell, seed, 4, 10).unwrap();
        let (j, rn) = (&cert.j, cert.reduction_number);
        prop_assert!(j.is_subset_of(&ideal).unwrap());
        let lhs = ideal.power(rn + 1).unwrap();
        let rhs = if rn == 0 { j.clone() } else { j.product(&ideal.power(rn).unwrap()).unwrap() };
        prop_assert!(lhs.same_as(&rhs).unwrap());
        let again = minimal_reduction(&ideal, ell, seed, 4, 10).unwrap();
        prop_assert_eq!(again.j.gens(), cert.j.gens());
    }
}
