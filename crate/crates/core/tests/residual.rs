use scmlab_core::corpus::example_25a;
use scmlab_core::homology::DepthStrategy;
use scmlab_core::ideal::Ideal;
use scmlab_core::order::MonomialOrder;
use scmlab_core::parse::parse_poly;
use scmlab_core::residual::{build_chain, d_sequence_check, verify_lemma21, DSequenceMode};
use scmlab_core::{mk_ring, Grading, Polynomial, Ring, Zp};

fn ring(vars: &[&str]) -> Ring<Zp> {
    mk_ring(Zp::default(), vars, Grading::Standard, MonomialOrder::DegRevLex).unwrap()
}

fn polys(r: &Ring<Zp>, src: &[&str]) -> Vec<Polynomial<Zp>> {
    src.iter().map(|s| parse_poly(r, s).unwrap()).collect()
}

#[test]
fn chain_over_a_regular_sequence() {
    let r = ring(&["x", "y", "z"]);
    let i = Ideal::new(&r, polys(&r, &["x", "y"])).unwrap();
    let one = build_chain(&i, 1, 3).unwrap();
    assert_eq!(one.heights, vec![Some(1)]);
    assert!(one.geometric[0]);
    let two = build_chain(&i, 2, 3).unwrap();
    let rep = verify_lemma21(&two, 0, DepthStrategy::Auto).unwrap();
    assert!(rep.c.iter().all(|c| c.pass));
    assert_eq!(rep.d.len(), 2);
    assert!(rep.d.iter().all(|c| c.pass));
    assert!(build_chain(&i, 3, 3).is_err());
}

#[test]
fn d_sequences() {
    let r = ring(&["x", "y", "z"]);
    let rep = d_sequence_check(&r, &polys(&r, &["x", "y", "z"]), DSequenceMode::Unconditioned { sample: 0, seed: 0 })
        .unwrap();
    assert!(rep.holds);
    assert_eq!(rep.permutations_checked, 6);
    assert!(!rep.probabilistic);
    let good = d_sequence_check(&r, &polys(&r, &["x*y", "x*z"]), DSequenceMode::FixedOrder).unwrap();
    assert!(good.holds);
    // (x^2) : (xy)^2 is the unit ideal but (x^2) : xy = (x)
    let bad = d_sequence_check(&r, &polys(&r, &["x^2", "x*y"]), DSequenceMode::FixedOrder).unwrap();
    assert!(!bad.holds);
    // the engine works with homogeneous ideals only
    let r2 = ring(&["x", "y"]);
    assert!(d_sequence_check(&r2, &polys(&r2, &["x", "y + x*y"]), DSequenceMode::FixedOrder).is_err());
}

#[test]
fn circulant_chain_satisfies_the_identities() {
    let i = example_25a(Zp::default()).unwrap();
    let chain = build_chain(&i, 4, 5).unwrap();
    assert!(chain.recheck().unwrap());
    let again = build_chain(&i, 4, 5).unwrap();
    assert_eq!(again.elements, chain.elements);
    let rep = verify_lemma21(&chain, 1, DepthStrategy::Auto).unwrap();
    assert!(rep.in_range_pass);
    assert!(!rep.diagnostic);
    let d = d_sequence_check(i.ring(), &chain.elements, DSequenceMode::Unconditioned { sample: 0, seed: 0 }).unwrap();
    assert!(d.holds);
    assert_eq!(d.permutations_checked, 24);
}
