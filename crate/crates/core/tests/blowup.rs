use scmlab_core::blowup::{
    analytic_spread, analytic_spread_equigenerated, jacobian_rank, minimal_reduction, rees_ideal, sym_linear_part,
    syzygetic_range, ReesOptions,
};
use scmlab_core::ideal::{minors, Ideal};
use scmlab_core::order::MonomialOrder;
use scmlab_core::parse::parse_poly;
use scmlab_core::{mk_ring, Grading, Polynomial, Ring, Zp};

fn ring(vars: &[&str]) -> Ring<Zp> {
    mk_ring(Zp::default(), vars, Grading::Standard, MonomialOrder::DegRevLex).unwrap()
}

fn ideal(r: &Ring<Zp>, src: &[&str]) -> Ideal<Zp> {
    Ideal::new(r, src.iter().map(|s| parse_poly(r, s).unwrap()).collect()).unwrap()
}

fn rational_normal_quartic_minors() -> Ideal<Zp> {
    let r = ring(&["x1", "x2", "x3", "x4"]);
    let p = |s: &str| parse_poly(&r, s).unwrap();
    let m: Vec<Vec<Polynomial<Zp>>> =
        vec![vec![p("x1"), p("x2"), p("x3"), p("x4")], vec![p("x2"), p("x3"), p("x4"), p("x1")]];
    Ideal::new(&r, minors(&r, &m, 2).unwrap()).unwrap()
}

#[test]
fn regular_sequence_is_of_linear_type() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x", "y"]);
    let p = rees_ideal(&i, &ReesOptions::default()).unwrap();
    assert!(p.complete);
    let q: Vec<String> = p.q.gens().iter().map(|g| g.monic().to_string()).collect();
    assert_eq!(q, vec!["y*T1 - x*T2"]);
    assert_eq!(p.q.mu(), 1);
    assert!(p.is_linear_type().unwrap());
    assert!(syzygetic_range(&p, 5).unwrap().holds);
    assert_eq!(analytic_spread(&p).unwrap(), 2);
    let c = minimal_reduction(&i, 2, 1, 3, 3).unwrap();
    assert_eq!(c.reduction_number, 0);
}

#[test]
fn maximal_ideal() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x", "y", "z"]);
    let p = rees_ideal(&i, &ReesOptions::default()).unwrap();
    assert_eq!(p.q.mu(), 3);
    assert_eq!(p.min_gen_bidegrees, vec![(1, 1); 3]);
    assert!(p.fiber_ideal().unwrap().is_zero());
    assert_eq!(analytic_spread(&p).unwrap(), 3);
    assert_eq!(analytic_spread_equigenerated(&i).unwrap(), 3);
}

#[test]
fn square_of_the_maximal_ideal_in_two_variables() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y", "y^2"]);
    assert_eq!(sym_linear_part(&i).unwrap().mu(), 2);
    let p = rees_ideal(&i, &ReesOptions::default()).unwrap();
    // the fiber cone is the twisted cubic's cone over the conic: one quadric in T
    assert!(p.min_gen_bidegrees.contains(&(0, 2)));
    assert!(!syzygetic_range(&p, 2).unwrap().holds);
    assert_eq!(analytic_spread(&p).unwrap(), 2);
    assert_eq!(jacobian_rank(&i, 3).unwrap(), 2);
}

#[test]
fn determinantal_example_equations() {
    let i = rational_normal_quartic_minors();
    assert_eq!(sym_linear_part(&i).unwrap().mu(), 8);
    let p = rees_ideal(&i, &ReesOptions::default()).unwrap();
    let s = syzygetic_range(&p, 2).unwrap();
    assert_eq!(s.first_failure_degree, Some(2));
    assert_eq!(analytic_spread(&p).unwrap(), 4);
    assert_eq!(analytic_spread_equigenerated(&i).unwrap(), 4);
    assert_eq!(jacobian_rank(&i, 5).unwrap(), 4);
    let capped = rees_ideal(&i, &ReesOptions { t_degree_cap: Some(2), max_basis: None }).unwrap();
    assert_eq!(syzygetic_range(&capped, 2).unwrap(), s);
    let linear_only = rees_ideal(&i, &ReesOptions { t_degree_cap: Some(1), max_basis: None }).unwrap();
    assert!(!linear_only.complete);
    assert!(syzygetic_range(&linear_only, 2).is_err());
    assert!(syzygetic_range(&linear_only, 1).unwrap().holds);
    let c = minimal_reduction(&i, 4, 11, 4, 3).unwrap();
    assert_eq!(c.j.mu(), 4);
    assert!(c.j.is_subset_of(&i).unwrap());
    let again = minimal_reduction(&i, 4, 11, 4, 3).unwrap();
    assert_eq!(again.j.gens(), c.j.gens());
    let r = c.reduction_number;
    let lhs = i.power(r + 1).unwrap();
    let rhs = if r == 0 { c.j.clone() } else { c.j.product(&i.power(r).unwrap()).unwrap() };
    assert!(lhs.same_as(&rhs).unwrap());
}
