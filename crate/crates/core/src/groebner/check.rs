//! Textbook division and S-polynomials, kept independent of the matrix engine so
//! that computed bases can be audited after the fact.

use super::ctx::{ModuleCtx, Vector};
use crate::field::Field;

/// Remainder of `v` under full multivariate division by `basis`.
pub fn naive_reduce<F: Field>(ctx: &ModuleCtx<F>, v: &Vector<F>, basis: &[Vector<F>]) -> Vector<F> {
    let f = ctx.field();
    let mut p = v.clone();
    let mut rem: Vector<F> = Vec::new();
    while !p.is_empty() {
        let (t, c) = p[0].clone();
        match basis.iter().find(|g| !g.is_empty() && g[0].0.divides(&t)) {
            Some(g) => {
                let m = g[0].0.mono.quotient_of(&t.mono);
                let coef = f.neg(&f.div(&c, &g[0].1));
                p = ctx.add_scaled(&p, g, &coef, &m);
            }
            None => {
                rem.push((t, c));
                p.remove(0);
            }
        }
    }
    rem
}

/// S-polynomial of two vectors, or `None` when their leads sit in different components.
pub fn s_vector<F: Field>(ctx: &ModuleCtx<F>, a: &Vector<F>, b: &Vector<F>) -> Option<Vector<F>> {
    let (ta, ca) = &a[0];
    let (tb, cb) = &b[0];
    if ta.comp != tb.comp {
        return None;
    }
    let f = ctx.field();
    let l = ta.mono.lcm(&tb.mono, ctx.ring.weights());
    let sa = ctx.scale(a, &f.inv(ca));
    let sa: Vector<F> = sa.into_iter().map(|(t, c)| (t.times(&ta.mono.quotient_of(&l)), c)).collect();
    Some(ctx.add_scaled(&sa, b, &f.neg(&f.inv(cb)), &tb.mono.quotient_of(&l)))
}

/// First pair of basis indices whose S-polynomial does not reduce to zero.
pub fn buchberger_violation<F: Field>(ctx: &ModuleCtx<F>, basis: &[Vector<F>]) -> Option<(usize, usize)> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = s_vector(ctx, &basis[i], &basis[j]) {
                if !naive_reduce(ctx, &s, basis).is_empty() {
                    return Some((i, j));
                }
            }
        }
    }
    None
}

/// Monic, and no term of any element is divisible by the lead of another.
pub fn is_reduced<F: Field>(ctx: &ModuleCtx<F>, basis: &[Vector<F>]) -> bool {
    let f = ctx.field();
    basis.iter().enumerate().all(|(i, g)| {
        !g.is_empty()
            && f.is_one(&g[0].1)
            && g.windows(2).all(|w| ctx.cmp(&w[0].0, &w[1].0).is_gt())
            && basis.iter().enumerate().all(|(j, h)| i == j || g.iter().all(|(t, _)| !h[0].0.divides(t)))
    })
}
