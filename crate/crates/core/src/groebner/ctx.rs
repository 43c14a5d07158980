use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use crate::field::Field;
use crate::monomial::{Mono, Term};
use crate::order::ModuleOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// An element of a free module: terms sorted decreasingly, no zero coefficients.
pub type Vector<F> = Vec<(Term, <F as Field>::Elem)>;

/// A graded free module `R^r = ⊕ R(-twist_i)` together with a term order.
#[derive(Clone, Debug)]
pub struct ModuleCtx<F: Field> {
    pub ring: Ring<F>,
    pub twists: Vec<i64>,
    pub order: ModuleOrder,
}

impl<F: Field> ModuleCtx<F> {
    /// The ring itself as a rank-one module.
    pub fn ideal(ring: &Ring<F>) -> Self {
        ModuleCtx { ring: ring.clone(), twists: vec![0], order: ModuleOrder::TermOverPosition }
    }

    pub fn free(ring: &Ring<F>, twists: Vec<i64>) -> Self {
        ModuleCtx { ring: ring.clone(), twists, order: ModuleOrder::TermOverPosition }
    }

    pub fn with_order(&self, order: ModuleOrder) -> Self {
        ModuleCtx { order, ..self.clone() }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp(self.ring.order(), self.ring.weights(), a, b)
    }

    #[inline]
    pub fn degree(&self, t: &Term) -> i64 {
        t.mono.degree() as i64 + self.twists[t.comp as usize]
    }

    pub fn sort(&self, v: &mut Vector<F>) {
        v.sort_by(|a, b| self.cmp(&b.0, &a.0));
    }

    /// Combine repeated terms, drop zeros and sort.
    pub fn normalize(&self, terms: Vec<(Term, F::Elem)>) -> Vector<F> {
        let f = self.field();
        let mut acc: FxHashMap<Term, F::Elem> = FxHashMap::default();
        for (t, c) in terms {
            let e = acc.entry(t).or_insert_with(|| f.zero());
            *e = f.add(e, &c);
        }
        let mut v: Vector<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        self.sort(&mut v);
        v
    }

    /// Largest degree of a term (the sugar of an input vector).
    pub fn sugar(&self, v: &Vector<F>) -> i64 {
        v.iter().map(|(t, _)| self.degree(t)).max().unwrap_or(i64::MIN)
    }

    pub fn is_homogeneous(&self, v: &Vector<F>) -> bool {
        let mut it = v.iter().map(|(t, _)| self.degree(t));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn from_poly(p: &Polynomial<F>) -> Vector<F> {
        p.terms().iter().map(|(m, c)| (Term::new(*m, 0), c.clone())).collect()
    }

    /// Rebuild one component of a vector as a polynomial.
    pub fn component(&self, v: &Vector<F>, comp: u32) -> Polynomial<F> {
        let terms: Vec<(Mono, F::Elem)> =
            v.iter().filter(|(t, _)| t.comp == comp).map(|(t, c)| (t.mono, c.clone())).collect();
        if matches!(self.order, ModuleOrder::TermOverPosition | ModuleOrder::PositionOverTerm) {
            Polynomial::from_sorted_terms(&self.ring, terms)
        } else {
            Polynomial::from_terms(&self.ring, terms)
        }
    }

    /// Assemble a vector from per-component polynomials.
    pub fn from_components(&self, comps: &[Polynomial<F>]) -> Vector<F> {
        let mut v: Vector<F> = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            for (m, c) in p.terms() {
                v.push((Term::new(*m, i as u32), c.clone()));
            }
        }
        self.sort(&mut v);
        v
    }

    /// `a + c * m * b`.
    pub fn add_scaled(&self, a: &Vector<F>, b: &Vector<F>, c: &F::Elem, m: &Mono) -> Vector<F> {
        let f = self.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let bt = if j < b.len() { Some(b[j].0.times(m)) } else { None };
            let ord = match (i < a.len(), bt) {
                (false, _) => Ordering::Less,
                (true, None) => Ordering::Greater,
                (true, Some(ref t)) => self.cmp(&a[i].0, t),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let x = f.mul(c, &b[j].1);
                    if !f.is_zero(&x) {
                        out.push((bt.unwrap(), x));
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
        out
    }

    pub fn scale(&self, v: &Vector<F>, c: &F::Elem) -> Vector<F> {
        let f = self.field();
        if f.is_zero(c) {
            return Vec::new();
        }
        v.iter().map(|(t, x)| (*t, f.mul(x, c))).collect()
    }

    pub fn monic(&self, v: &Vector<F>) -> Vector<F> {
        match v.first() {
            None => Vec::new(),
            Some((_, c)) => self.scale(v, &self.field().inv(c)),
        }
    }

    /// Multiply every term by a polynomial (a ring element acting on the module).
    pub fn mul_poly(&self, v: &Vector<F>, p: &Polynomial<F>) -> Vector<F> {
        let f = self.field();
        let mut terms = Vec::with_capacity(v.len() * p.len());
        for (t, c) in v {
            for (m, d) in p.terms() {
                terms.push((t.times(m), f.mul(c, d)));
            }
        }
        self.normalize(terms)
    }
}
