//! Hilbert series of monomial ideals and of modules with a Gröbner basis.

use serde::Serialize;

use crate::monomial::Mono;

/// `t^shift * (sum numerator[k] t^k) / prod_i (1 - t^{w_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub shift: i64,
    pub numerator: Vec<i64>,
    pub weights: Vec<u32>,
}

fn trim(mut shift: i64, mut v: Vec<i64>) -> (i64, Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
    let lead = v.iter().take_while(|&&c| c == 0).count();
    if lead == v.len() {
        return (0, Vec::new());
    }
    v.drain(..lead);
    shift += lead as i64;
    (shift, v)
}

impl HilbertSeries {
    pub fn new(shift: i64, numerator: Vec<i64>, weights: Vec<u32>) -> Self {
        let (shift, numerator) = trim(shift, numerator);
        HilbertSeries { shift, numerator, weights }
    }

    pub fn zero(weights: Vec<u32>) -> Self {
        HilbertSeries { shift: 0, numerator: Vec::new(), weights }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Sum of two series over the same ring.
    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        assert_eq!(self.weights, other.weights);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.numerator.len() as i64).max(other.shift + other.numerator.len() as i64);
        let mut v = vec![0i64; (hi - lo) as usize];
        for (k, c) in self.numerator.iter().enumerate() {
            v[(self.shift - lo) as usize + k] += c;
        }
        for (k, c) in other.numerator.iter().enumerate() {
            v[(other.shift - lo) as usize + k] += c;
        }
        HilbertSeries::new(lo, v, self.weights.clone())
    }

    pub fn scaled(&self, c: i64) -> HilbertSeries {
        HilbertSeries::new(self.shift, self.numerator.iter().map(|x| x * c).collect(), self.weights.clone())
    }

    pub fn shifted(&self, d: i64) -> HilbertSeries {
        HilbertSeries { shift: self.shift + d, ..self.clone() }
    }

    /// Krull dimension: the pole order at `t = 1`, or `-1` for the zero module.
    pub fn dim(&self) -> i64 {
        if self.is_zero() {
            return -1;
        }
        let mut v = self.numerator.clone();
        let mut k = 0;
        while v.iter().sum::<i64>() == 0 {
            v = divide_one_minus_t(&v);
            k += 1;
        }
        self.nvars() as i64 - k
    }

    /// Coefficients of the series in degrees `shift ..= shift + len - 1`.
    pub fn expand(&self, len: usize) -> Vec<i64> {
        let mut s = vec![0i64; len];
        for (k, c) in self.numerator.iter().enumerate() {
            if k < len {
                s[k] = *c;
            }
        }
        for &w in &self.weights {
            let w = w as usize;
            for k in w..len {
                s[k] += s[k - w];
            }
        }
        s
    }

    /// Numerator over `(1 - t)^dim` when every weight is one (the h-vector).
    pub fn h_vector(&self) -> Option<Vec<i64>> {
        if self.weights.iter().any(|&w| w != 1) || self.is_zero() {
            return None;
        }
        let mut v = self.numerator.clone();
        while v.iter().sum::<i64>() == 0 {
            v = divide_one_minus_t(&v);
        }
        Some(v)
    }

    /// Same numerator viewed over a polynomial ring in `k` fewer standard variables.
    pub fn drop_variables(&self, k: usize) -> HilbertSeries {
        HilbertSeries { weights: self.weights[k.min(self.weights.len())..].to_vec(), ..self.clone() }
    }
}

fn divide_one_minus_t(v: &[i64]) -> Vec<i64> {
    // v = (1 - t) q  =>  q_k = sum_{i <= k} v_i
    let mut q = Vec::with_capacity(v.len().saturating_sub(1));
    let mut acc = 0;
    for c in &v[..v.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}

fn mul_one_minus_tpow(v: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; v.len() + d];
    for (k, c) in v.iter().enumerate() {
        out[k] += c;
        out[k + d] -= c;
    }
    out
}

fn add_into(acc: &mut Vec<i64>, v: &[i64], offset: usize) {
    if acc.len() < v.len() + offset {
        acc.resize(v.len() + offset, 0);
    }
    for (k, c) in v.iter().enumerate() {
        acc[k + offset] += c;
    }
}

/// Drop monomials divisible by another one in the list.
pub fn minimize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    gens.dedup();
    let mut out: Vec<(Mono, u64)> = Vec::with_capacity(gens.len());
    for m in gens {
        let s = m.sev();
        if !out.iter().any(|(g, gs)| gs & !s == 0 && g.divides(&m)) {
            out.push((m, s));
        }
    }
    out.into_iter().map(|(m, _)| m).collect()
}

fn set_exp(m: &Mono, i: usize, e: u16, weights: &[u32]) -> Mono {
    let mut out = *m;
    out.set_exp(i, e, weights);
    out
}

/// Numerator of the Hilbert series of `k[x] / (gens)`.
pub fn monomial_numerator(gens: &[Mono], weights: &[u32]) -> Vec<i64> {
    let (_, v) = trim(0, numer(minimize(gens.to_vec()), weights));
    v
}

fn numer(gens: Vec<Mono>, weights: &[u32]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let n = weights.len();
    let coprime = {
        let mut seen = 0u64;
        gens.iter().all(|m| {
            let s: u64 = m.support().fold(0, |a, i| a | (1 << i));
            let ok = seen & s == 0;
            seen |= s;
            ok
        })
    };
    if coprime {
        let mut v = vec![1i64];
        for m in &gens {
            v = mul_one_minus_tpow(&v, m.degree() as usize);
        }
        return v;
    }
    // Pivot on the variable occurring in the most mixed generators, at the median
    // exponent; pure powers are left out so that the pivot is never a generator.
    let mixed: Vec<&Mono> = gens.iter().filter(|m| m.support().nth(1).is_some()).collect();
    let mut counts = vec![0usize; n];
    for m in &mixed {
        for i in m.support() {
            counts[i] += 1;
        }
    }
    let x = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut es: Vec<u16> = mixed.iter().map(|m| m.exp(x)).filter(|&e| e > 0).collect();
    es.sort_unstable();
    let e = es[(es.len() - 1) / 2];
    let p = set_exp(&Mono::ONE, x, e, weights);

    let mut plus: Vec<Mono> = gens.iter().filter(|m| m.exp(x) < e).copied().collect();
    plus.push(p);
    let colon: Vec<Mono> = gens.iter().map(|m| set_exp(m, x, m.exp(x).saturating_sub(e), weights)).collect();

    let mut v = numer(minimize(plus), weights);
    let w = numer(minimize(colon), weights);
    add_into(&mut v, &w, p.degree() as usize);
    v
}

/// Krull dimension of `k[x]/(gens)` as `n` minus the least number of variables
/// meeting every generator's support.
pub fn combinatorial_dim(gens: &[Mono], nvars: usize) -> i64 {
    let gens = minimize(gens.to_vec());
    if gens.is_empty() {
        return nvars as i64;
    }
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = gens.iter().map(|m| m.support().fold(0u32, |a, i| a | (1 << i))).collect();
    let mut best = nvars as u32;
    cover(&supports, 0, 0, &mut best);
    nvars as i64 - best as i64
}

fn cover(supports: &[u32], chosen: u32, size: u32, best: &mut u32) {
    if size >= *best {
        return;
    }
    match supports.iter().filter(|&&s| s & chosen == 0).min_by_key(|s| s.count_ones()) {
        None => *best = size,
        Some(&s) => {
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                cover(supports, chosen | bit, size + 1, best);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Mono {
        Mono::from_exponents(e, &vec![1; e.len()])
    }

    #[test]
    fn numerators_of_small_ideals() {
        let w = [1, 1];
        // (x^2, xy): 1 - 2t^2 + t^3
        assert_eq!(monomial_numerator(&[m(&[2, 0]), m(&[1, 1])], &w), vec![1, 0, -2, 1]);
        // (x, y): (1-t)^2
        assert_eq!(monomial_numerator(&[m(&[1, 0]), m(&[0, 1])], &w), vec![1, -2, 1]);
        assert_eq!(monomial_numerator(&[], &w), vec![1]);
    }

    #[test]
    fn dimensions_agree() {
        let gens = [m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        let hs = HilbertSeries::new(0, monomial_numerator(&gens, &[1, 1, 1]), vec![1, 1, 1]);
        assert_eq!(hs.dim(), 1);
        assert_eq!(combinatorial_dim(&gens, 3), 1);
        assert_eq!(hs.expand(4), vec![1, 3, 3, 3]);
        assert_eq!(hs.h_vector().unwrap(), vec![1, 2]);
    }

    #[test]
    fn weighted_series() {
        // k[x] with deg x = 2 modulo x^2: 1 + t^2
        let hs = HilbertSeries::new(0, monomial_numerator(&[Mono::from_exponents(&[2], &[2])], &[2]), vec![2]);
        assert_eq!(hs.expand(6), vec![1, 0, 1, 0, 0, 0]);
        assert_eq!(hs.dim(), 0);
    }
}
