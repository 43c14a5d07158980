//! Exponent vectors and module terms.

use std::fmt;

/// Maximum number of ring variables. Exponent vectors are stored inline.
pub const MAX_VARS: usize = 32;

/// A monomial: exponent vector plus its cached total (weighted) degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { exps: [0; MAX_VARS], deg: 0 };

    pub fn from_exponents(exps: &[u16], weights: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0u32;
        for (i, &x) in exps.iter().enumerate() {
            e[i] = x;
            deg += x as u32 * weights[i];
        }
        Mono { exps: e, deg }
    }

    pub fn var(index: usize, weights: &[u32]) -> Mono {
        let mut m = Mono::ONE;
        m.exps[index] = 1;
        m.deg = weights[index];
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Total degree with respect to the ring's positive weights.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Mono { exps: e, deg: self.deg + other.deg }
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        debug_assert!(self.divides(other));
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = other.exps[i] - self.exps[i];
        }
        Mono { exps: e, deg: other.deg - self.deg }
    }

    pub fn checked_div(&self, divisor: &Mono) -> Option<Mono> {
        if divisor.divides(self) {
            Some(divisor.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Mono, weights: &[u32]) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..weights.len() {
            e[i] = self.exps[i].max(other.exps[i]);
            deg += e[i] as u32 * weights[i];
        }
        Mono { exps: e, deg }
    }

    pub fn gcd(&self, other: &Mono, weights: &[u32]) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..weights.len() {
            e[i] = self.exps[i].min(other.exps[i]);
            deg += e[i] as u32 * weights[i];
        }
        Mono { exps: e, deg }
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Replace exponents of variables `i` with `mask[i]` by zero.
    pub fn without(&self, drop: &[bool], weights: &[u32]) -> Mono {
        let mut m = *self;
        for (i, &d) in drop.iter().enumerate() {
            if d && m.exps[i] > 0 {
                m.deg -= m.exps[i] as u32 * weights[i];
                m.exps[i] = 0;
            }
        }
        m
    }

    /// Divisibility mask: bit `i` is set iff variable `i` occurs, bit `32 + i` iff
    /// its exponent is at least 2.
    #[inline]
    pub fn sev(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..MAX_VARS {
            let e = self.exps[i];
            if e > 0 {
                s |= 1 << i;
                if e > 1 {
                    s |= 1 << (32 + i);
                }
            }
        }
        s
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.exps[i] > 0)
    }

    pub(crate) fn set_exp(&mut self, i: usize, e: u16, weights: &[u32]) {
        self.deg = self.deg + e as u32 * weights[i] - self.exps[i] as u32 * weights[i];
        self.exps[i] = e;
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// A term `mono * e_comp` of a free module; for ideals `comp` is always 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mono: Mono,
    pub comp: u32,
}

impl Term {
    #[inline]
    pub fn new(mono: Mono, comp: u32) -> Term {
        Term { mono, comp }
    }

    #[inline]
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }

    #[inline]
    pub fn times(&self, m: &Mono) -> Term {
        Term { mono: self.mono.mul(m), comp: self.comp }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let w = [1u32, 1, 1];
        let a = Mono::from_exponents(&[2, 1, 0], &w);
        let b = Mono::from_exponents(&[1, 3, 0], &w);
        let l = a.lcm(&b, &w);
        assert_eq!(l, Mono::from_exponents(&[2, 3, 0], &w));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), Mono::from_exponents(&[0, 2, 0], &w));
        assert_eq!(a.gcd(&b, &w).degree(), 2);
        assert!(!a.is_coprime(&b));
        assert_eq!(a.sev() & !l.sev(), 0);
    }
}
