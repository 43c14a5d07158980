//! Random small inputs shared by the property suites.
#![allow(dead_code)]

use proptest::prelude::*;

use scmlab_core::order::MonomialOrder;
use scmlab_core::{mk_ring, Field, Grading, Polynomial, Ring, Zp};

pub const CASES: u32 = 200;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

pub fn ring3() -> Ring<Zp> {
    mk_ring(Zp::default(), &["x", "y", "z"], Grading::Standard, MonomialOrder::DegRevLex).unwrap()
}

/// Raw terms of a homogeneous polynomial in three variables: `(a, b, c)` with
/// exponents `a`, `b mod (d - a + 1)` and the remainder.
pub type RawPoly = (u32, Vec<(u32, u32, u32)>);

pub fn raw_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    (1..=max_deg).prop_flat_map(move |d| (Just(d), prop::collection::vec((0..=d, 0..=d, 1u32..32003), 1..=max_terms)))
}

pub fn raw_polys(
    n: std::ops::RangeInclusive<usize>,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(raw_poly(max_deg, max_terms), n)
}

pub fn build<F: Field>(ring: &Ring<F>, raw: &RawPoly) -> Polynomial<F> {
    let (d, terms) = raw;
    let f = ring.field();
    let mut out = Polynomial::zero(ring);
    for &(a, b, c) in terms {
        let a = a.min(*d);
        let b = b % (d - a + 1);
        let m = ring.mono(&[a as u16, b as u16, (d - a - b) as u16]);
        out = &out + &Polynomial::monomial(ring, m, f.from_i64(c as i64));
    }
    out
}

pub fn build_all<F: Field>(ring: &Ring<F>, raw: &[RawPoly]) -> Vec<Polynomial<F>> {
    raw.iter().map(|r| build(ring, r)).filter(|p| !p.is_zero()).collect()
}
