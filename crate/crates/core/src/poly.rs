//! Sparse multivariate polynomials over a [`PolyRing`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Mono;
use crate::ring::{same_ring, Ring};

/// A polynomial; terms are kept sorted in decreasing order with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Mono, F::Elem)>,
}

/// Homogeneity data of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeInfo {
    pub is_homogeneous: bool,
    pub multidegree: Option<Vec<i64>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Mono::ONE, c)
    }

    pub fn monomial(ring: &Ring<F>, m: Mono, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring<F>, i: usize) -> Self {
        Self::monomial(ring, ring.var_mono(i), ring.field().one())
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring<F>, terms: Vec<(Mono, F::Elem)>) -> Self {
        let f = ring.field();
        let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert_with(|| f.zero());
            *e = f.add(e, &c);
        }
        let mut v: Vec<(Mono, F::Elem)> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        v.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms: v }
    }

    /// Build from terms that are already sorted decreasingly, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Ring<F>, terms: Vec<(Mono, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }
    pub fn terms(&self) -> &[(Mono, F::Elem)] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<(Mono, F::Elem)> {
        self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn leading_mono(&self) -> Option<&Mono> {
        self.terms.first().map(|t| &t.0)
    }
    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_info(&self) -> DegreeInfo {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.multidegree(m));
        match degs.next() {
            None => DegreeInfo { is_homogeneous: true, multidegree: None },
            Some(first) => {
                let homog = degs.all(|d| d == first);
                DegreeInfo { is_homogeneous: homog, multidegree: homog.then_some(first) }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().is_homogeneous
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &self.ring.field().one(), &Mono::ONE))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &self.ring.field().neg(&self.ring.field().one()), &Mono::ONE))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * m * other` by merging sorted term lists.
    pub fn add_scaled(&self, other: &Self, c: &F::Elem, m: &Mono) -> Self {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                self.ring.cmp(&a[i].0, &b[j].0.mul(m))
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coef = f.mul(c, &b[j].1);
                    if !f.is_zero(&coef) {
                        out.push((b[j].0.mul(m), coef));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a[i].1, &f.mul(c, &b[j].1));
                    if !f.is_zero(&s) {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let f = self.ring.field();
        let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        v.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms: v }
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (*m, f.mul(x, c))).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_impl(self);
        }
        acc
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scalar_mul(&self.ring.field().inv(c)),
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]`, all in `target`.
    pub fn substitute(&self, target: &Ring<F>, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), found: images.len() });
        }
        if images.iter().any(|p| !same_ring(&p.ring, target)) {
            return Err(Error::RingMismatch);
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.nvars();
        // cache powers of each image
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![vec![Polynomial::one(target)]; n];
        let mut acc: FxHashMap<Mono, F::Elem> = FxHashMap::default();
        let f = target.field();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for i in 0..n {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul_impl(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_impl(&powers[i][e]);
                if prod.is_zero() {
                    break;
                }
            }
            for (pm, pc) in prod.terms {
                let entry = acc.entry(pm).or_insert_with(|| f.zero());
                *entry = f.add(entry, &pc);
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        v.sort_by(|a, b| target.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: target.clone(), terms: v })
    }

    /// Move to another ring with the same field by sending variable `i` to variable
    /// `var_map[i]` of `target`.
    pub fn rename_into(&self, target: &Ring<F>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &j) in var_map.iter().enumerate() {
                    e[j] += m.exp(i);
                }
                (target.mono(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same terms re-sorted for a ring that differs only in order or weights.
    pub fn reinterpret(&self, target: &Ring<F>) -> Self {
        assert_eq!(self.ring.nvars(), target.nvars());
        let terms = self.terms.iter().map(|(m, c)| (target.mono(&m.exps()[..target.nvars()]), c.clone())).collect();
        Polynomial::from_terms(target, terms)
    }

    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = self.ring.field();
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = f.display_parts(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&self.ring.format_mono(m));
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_canonical_string())
    }
}

// Operator forms panic on a ring mismatch; use the `checked_*` methods to get errors.
impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}
impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}
impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}
impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let f = self.ring.field();
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rationals, Zp};
    use crate::order::MonomialOrder;
    use crate::parse::parse_poly;
    use crate::ring::{mk_ring, Grading};

    #[test]
    fn square_of_binomial() {
        let r = mk_ring(Rationals, &["x", "y"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let p = parse_poly(&r, "x+y").unwrap();
        assert_eq!((&p * &p).to_string(), "x^2 + 2*x*y + y^2");
        let r2 = mk_ring(Zp::new(2).unwrap(), &["x", "y"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let q = parse_poly(&r2, "x+y").unwrap();
        assert_eq!(q.pow(2).to_string(), "x^2 + y^2");
    }

    #[test]
    fn koszul_relation_vanishes_under_substitution() {
        let f = Zp::default();
        let b = mk_ring(f, &["x", "y", "T1", "T2"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let tgt = mk_ring(f, &["x", "y", "t"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let rel = parse_poly(&b, "T1*y - T2*x").unwrap();
        let x = Polynomial::var(&tgt, 0);
        let y = Polynomial::var(&tgt, 1);
        let t = Polynomial::var(&tgt, 2);
        let images = vec![x.clone(), y.clone(), &x * &t, &y * &t];
        assert!(rel.substitute(&tgt, &images).unwrap().is_zero());
        assert!(matches!(rel.substitute(&tgt, &images[..3]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn homogeneity() {
        let r = mk_ring(Rationals, &["x", "y"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let p = parse_poly(&r, "x^2 + x*y").unwrap();
        assert_eq!(p.degree_info(), DegreeInfo { is_homogeneous: true, multidegree: Some(vec![2]) });
        assert!(!parse_poly(&r, "x^2 + x").unwrap().is_homogeneous());
    }

    #[test]
    fn rees_generator_is_bihomogeneous() {
        let r = mk_ring(
            Zp::default(),
            &["t", "x", "y", "T"],
            Grading::Multi(vec![vec![0, 1], vec![1, 0], vec![1, 0], vec![2, 1]]),
            MonomialOrder::elimination(1, 4),
        )
        .unwrap();
        let p = parse_poly(&r, "T - x*y*t").unwrap();
        assert_eq!(p.degree_info().multidegree, Some(vec![2, 1]));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = mk_ring(Rationals, &["x"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let b = mk_ring(Rationals, &["y"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(Polynomial::var(&a, 0).checked_add(&Polynomial::var(&b, 0)), Err(Error::RingMismatch));
    }
}
