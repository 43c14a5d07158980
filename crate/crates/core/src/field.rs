//! Coefficient fields: prime fields `Z/p` and the rationals.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The default coefficient field used by builders and the CLI.
pub const DEFAULT_PRIME: u32 = 32003;

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    /// Accepts `QQ`, `Q`, `ZZ/p`, `GF(p)` or a bare prime `p`.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        let t = text.trim();
        if t == "QQ" || t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits =
            t.strip_prefix("ZZ/").or_else(|| t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')'))).unwrap_or(t);
        let p: u64 = digits.parse().map_err(|_| Error::InvalidField(format!("cannot parse field `{text}`")))?;
        check_prime(p)?;
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "QQ".to_string(),
            FieldSpec::PrimeField(p) => format!("ZZ/{p}"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if !(2..(1 << 31)).contains(&p) {
        return Err(Error::InvalidField(format!("characteristic {p} outside the supported range [2, 2^31)")));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        d += 1;
    }
    Ok(())
}

/// Exact field arithmetic. Elements are plain values; the field value carries
/// whatever context (the modulus) the operations need.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Uniformly random element (small integers for the rationals).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// `Some((negative, magnitude))` used by the printer.
    fn display_parts(&self, a: &Self::Elem) -> (bool, String);

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_rational(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::Coefficient(format!("denominator {den} vanishes in {}", self.spec().label())));
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }
}

/// The prime field `Z/p` with canonical representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zp {
    p: u32,
}

impl Zp {
    pub fn new(p: u32) -> Result<Zp> {
        check_prime(p as u64)?;
        Ok(Zp { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }
}

impl Default for Zp {
    fn default() -> Self {
        Zp { p: DEFAULT_PRIME }
    }
}

impl Field for Zp {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in ZZ/{}", self.p);
        self.pow(*a, self.p as u64 - 2)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_bigint(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u32().expect("reduced residue fits in u32")
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn display_parts(&self, a: &u32) -> (bool, String) {
        if *a > self.p / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in QQ");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-99..=99))
    }
    fn display_parts(&self, a: &BigRational) -> (bool, String) {
        let m = a.abs();
        let s = if m.denom().is_one() { m.numer().to_string() } else { format!("{}/{}", m.numer(), m.denom()) };
        (a.is_negative(), s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zp_normalizes_and_inverts() {
        let f = Zp::new(5).unwrap();
        assert_eq!(f.from_i64(7), 2);
        assert_eq!(f.from_i64(-1), 4);
        for a in 1..5u32 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.display_parts(&4), (true, "1".into()));
    }

    #[test]
    fn rejects_composite_and_parses_specs() {
        assert!(Zp::new(32001).is_err());
        assert!(Zp::new(9).is_err());
        assert_eq!(FieldSpec::parse("ZZ/32003").unwrap(), FieldSpec::PrimeField(32003));
        assert_eq!(FieldSpec::parse("QQ").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("ZZ/15").is_err());
    }

    #[test]
    fn rational_display() {
        let q = Rationals;
        let x = q.from_rational(&BigInt::from(-3), &BigInt::from(6)).unwrap();
        assert_eq!(q.display_parts(&x), (true, "1/2".into()));
    }
}
