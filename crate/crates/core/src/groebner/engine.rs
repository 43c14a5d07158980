//! Linear-algebra Gröbner engine.
//!
//! Pairs are processed degree by degree (sugar degree for inhomogeneous input).
//! All S-polynomials of one degree are reduced together: every needed multiple
//! of a basis element becomes a matrix row and the rows are echelonized with a
//! dense accumulator. Input generators are fed in at their own degree after the
//! pair rows, so a generator whose row survives is a minimal generator.

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::ctx::{ModuleCtx, Vector};
use crate::field::Field;
use crate::monomial::{Mono, Term};

/// Resource caps. Hitting any of them leaves the result marked incomplete.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbOptions {
    /// Stop before processing any degree above this one.
    pub degree_cap: Option<i64>,
    /// Drop pairs and generators whose degree in grading component `.0` exceeds `.1`.
    pub grading_cap: Option<(usize, i64)>,
    /// Give up once the basis grows past this many elements.
    pub max_basis: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub steps: usize,
    pub pairs_processed: usize,
    pub pairs_pruned: usize,
    pub zero_reductions: usize,
    pub max_rows: usize,
    pub max_cols: usize,
}

#[derive(Clone, Debug)]
pub struct GbOutcome<F: Field> {
    /// Reduced monic basis sorted by increasing leading term.
    pub basis: Vec<Vector<F>>,
    /// Input indices that turned out to be minimal generators (homogeneous input).
    pub minimal_gens: Vec<usize>,
    pub complete: bool,
    /// Set when `degree_cap` or `max_basis` stopped the computation.
    pub resource_capped: bool,
    pub stats: GbStats,
}

#[derive(Clone, Debug)]
struct Elt<F: Field> {
    v: Vector<F>,
    lt: Term,
    sev: u64,
    sugar: i64,
    redundant: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    sugar: i64,
}

type Row<E> = Vec<(u32, E)>;

/// Columns, pivot rows and pending rows of one reduction step.
struct Matrix<'a, F: Field> {
    ctx: &'a ModuleCtx<F>,
    col_of: FxHashMap<Term, u32>,
    terms: Vec<Term>,
    pivot: Vec<Option<u32>>,
    rows: Vec<Row<F::Elem>>,
    todo: Vec<Row<F::Elem>>,
    scanned: usize,
}

impl<'a, F: Field> Matrix<'a, F> {
    fn new(ctx: &'a ModuleCtx<F>) -> Self {
        Matrix {
            ctx,
            col_of: FxHashMap::default(),
            terms: Vec::new(),
            pivot: Vec::new(),
            rows: Vec::new(),
            todo: Vec::new(),
            scanned: 0,
        }
    }

    fn col(&mut self, t: Term) -> u32 {
        if let Some(&c) = self.col_of.get(&t) {
            return c;
        }
        let c = self.terms.len() as u32;
        self.terms.push(t);
        self.pivot.push(None);
        self.col_of.insert(t, c);
        c
    }

    fn row_from(&mut self, v: &Vector<F>, m: &Mono) -> Row<F::Elem> {
        v.iter().map(|(t, c)| (self.col(t.times(m)), c.clone())).collect()
    }

    fn has_pivot(&mut self, t: Term) -> bool {
        let c = self.col(t);
        self.pivot[c as usize].is_some()
    }

    fn push_pivot(&mut self, row: Row<F::Elem>) {
        let c = row[0].0 as usize;
        debug_assert!(self.pivot[c].is_none());
        self.pivot[c] = Some(self.rows.len() as u32);
        self.rows.push(row);
    }

    /// Give every column that some basis leading term divides a pivot row.
    fn preprocess(&mut self, basis: &Lookup<'_, F>) {
        while self.scanned < self.terms.len() {
            let c = self.scanned;
            self.scanned += 1;
            if self.pivot[c].is_some() {
                continue;
            }
            let t = self.terms[c];
            if let Some((e, m)) = basis.find(&t) {
                let row = self.row_from(basis.vector(e), &m);
                self.push_pivot(row);
            }
        }
    }

    /// Renumber columns so that index order is decreasing term order.
    fn sort_columns(&mut self) {
        let ctx = self.ctx;
        let mut perm: Vec<u32> = (0..self.terms.len() as u32).collect();
        perm.sort_by(|&a, &b| ctx.cmp(&self.terms[b as usize], &self.terms[a as usize]));
        let mut new_of = vec![0u32; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_of[old as usize] = new as u32;
        }
        self.terms = perm.iter().map(|&o| self.terms[o as usize]).collect();
        let mut pivot = vec![None; perm.len()];
        for (old, p) in self.pivot.iter().enumerate() {
            pivot[new_of[old] as usize] = *p;
        }
        self.pivot = pivot;
        for row in self.rows.iter_mut().chain(self.todo.iter_mut()) {
            for e in row.iter_mut() {
                e.0 = new_of[e.0 as usize];
            }
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        }
        self.col_of.clear();
    }

    /// Reduce a row by all current pivot rows. With `skip_lead` the first entry is
    /// kept as is and only the tail is reduced.
    fn reduce(&self, acc: &mut [F::Elem], row: &Row<F::Elem>, skip_lead: bool) -> Row<F::Elem> {
        let f = self.ctx.field();
        let mut out = Vec::new();
        if row.is_empty() {
            return out;
        }
        let mut end = 0usize;
        for (c, v) in row {
            acc[*c as usize] = v.clone();
            end = end.max(*c as usize);
        }
        let mut c = row[0].0 as usize;
        if skip_lead {
            out.push((c as u32, std::mem::replace(&mut acc[c], f.zero())));
            c += 1;
        }
        while c <= end {
            if !f.is_zero(&acc[c]) {
                let coef = std::mem::replace(&mut acc[c], f.zero());
                match self.pivot[c] {
                    Some(p) => {
                        let prow = &self.rows[p as usize];
                        for (cc, v) in &prow[1..] {
                            let slot = &mut acc[*cc as usize];
                            *slot = f.sub(slot, &f.mul(&coef, v));
                        }
                        end = end.max(prow.last().unwrap().0 as usize);
                    }
                    None => out.push((c as u32, coef)),
                }
            }
            c += 1;
        }
        out
    }

    fn to_vector(&self, row: &Row<F::Elem>) -> Vector<F> {
        row.iter().map(|(c, v)| (self.terms[*c as usize], v.clone())).collect()
    }

    fn shape(&self) -> (usize, usize) {
        (self.rows.len() + self.todo.len(), self.terms.len())
    }
}

/// Divisor search over a list of monic vectors.
struct Lookup<'a, F: Field> {
    vecs: Vec<&'a Vector<F>>,
    by_comp: FxHashMap<u32, Vec<(Term, u64, usize)>>,
}

impl<'a, F: Field> Lookup<'a, F> {
    fn new() -> Self {
        Lookup { vecs: Vec::new(), by_comp: FxHashMap::default() }
    }

    fn push(&mut self, v: &'a Vector<F>) {
        let lt = v[0].0;
        let idx = self.vecs.len();
        self.vecs.push(v);
        self.by_comp.entry(lt.comp).or_default().push((lt, lt.mono.sev(), idx));
    }

    fn vector(&self, i: usize) -> &'a Vector<F> {
        self.vecs[i]
    }

    /// First element whose leading term divides `t`, with the cofactor.
    fn find(&self, t: &Term) -> Option<(usize, Mono)> {
        let sev = t.mono.sev();
        let list = self.by_comp.get(&t.comp)?;
        for (lt, s, i) in list {
            if s & !sev == 0 && lt.mono.divides(&t.mono) {
                return Some((*i, lt.mono.quotient_of(&t.mono)));
            }
        }
        None
    }
}

/// Reduce each target by `basis` (monic, nonzero) without letting targets reduce
/// one another. With `skip_lead` only the tails are reduced.
pub fn reduce_against<F: Field>(
    ctx: &ModuleCtx<F>,
    basis: &[Vector<F>],
    targets: &[Vector<F>],
    skip_lead: bool,
) -> Vec<Vector<F>> {
    let mut lookup = Lookup::new();
    for b in basis {
        debug_assert!(!b.is_empty());
        lookup.push(b);
    }
    let mut mat = Matrix::new(ctx);
    for t in targets {
        let row = mat.row_from(t, &Mono::ONE);
        mat.todo.push(row);
    }
    // With `skip_lead` a target's own pivot is harmless: `reduce` bypasses the lead.
    mat.preprocess(&lookup);
    mat.sort_columns();
    let mut acc = vec![ctx.field().zero(); mat.terms.len()];
    let todo = std::mem::take(&mut mat.todo);
    todo.iter().map(|row| mat.to_vector(&mat.reduce(&mut acc, row, skip_lead))).collect()
}

struct Engine<'a, F: Field> {
    ctx: &'a ModuleCtx<F>,
    opts: &'a GbOptions,
    basis: Vec<Elt<F>>,
    pairs: Vec<Pair>,
    product_criterion: bool,
    truncated: bool,
    stats: GbStats,
}

impl<'a, F: Field> Engine<'a, F> {
    fn grading_ok(&self, m: &Mono) -> bool {
        match self.opts.grading_cap {
            None => true,
            Some((k, cap)) => self.ctx.ring.multidegree(m)[k] <= cap,
        }
    }

    fn insert(&mut self, v: Vector<F>, sugar: i64) {
        let lt = v[0].0;
        let h = self.basis.len();
        self.basis.push(Elt { sev: lt.mono.sev(), lt, v, sugar, redundant: false });
        self.update(h);
    }

    /// Gebauer–Möller installation of the pairs of a new element.
    fn update(&mut self, h: usize) {
        let w = self.ctx.ring.weights();
        let lt_h = self.basis[h].lt;
        let mut cands: Vec<(usize, Mono, bool)> = Vec::new();
        for (i, e) in self.basis[..h].iter().enumerate() {
            if e.redundant || e.lt.comp != lt_h.comp {
                continue;
            }
            let l = e.lt.mono.lcm(&lt_h.mono, w);
            let coprime = self.product_criterion && e.lt.mono.is_coprime(&lt_h.mono);
            cands.push((i, l, coprime));
        }
        let mut alive = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            let la = cands[a].1;
            if (0..cands.len()).any(|b| b != a && alive[b] && cands[b].1.divides(&la)) {
                alive[a] = false;
            }
        }

        let before = self.pairs.len();
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.lcm.comp != lt_h.comp || !lt_h.mono.divides(&p.lcm.mono) {
                return true;
            }
            let li = basis[p.i].lt.mono.lcm(&lt_h.mono, w);
            let lj = basis[p.j].lt.mono.lcm(&lt_h.mono, w);
            li == p.lcm.mono || lj == p.lcm.mono
        });
        self.stats.pairs_pruned += before - self.pairs.len();
        self.stats.pairs_pruned += cands.iter().zip(&alive).filter(|(c, a)| !**a || c.2).count();

        for ((i, l, coprime), keep) in cands.into_iter().zip(alive) {
            if !keep || coprime {
                continue;
            }
            if !self.grading_ok(&l) {
                self.truncated = true;
                continue;
            }
            let ei = &self.basis[i];
            let eh = &self.basis[h];
            let dl = l.degree() as i64;
            let sugar = (ei.sugar + dl - ei.lt.mono.degree() as i64).max(eh.sugar + dl - eh.lt.mono.degree() as i64);
            self.pairs.push(Pair { i, j: h, lcm: Term::new(l, lt_h.comp), sugar });
        }

        for i in 0..h {
            let e = &self.basis[i];
            if !e.redundant
                && e.lt.comp == lt_h.comp
                && self.basis[h].sev & !e.sev == 0
                && lt_h.mono.divides(&e.lt.mono)
            {
                self.basis[i].redundant = true;
            }
        }
    }

    /// One degree: reduce the selected pairs, then the new generators.
    fn step(&mut self, d: i64, mut pairs: Vec<Pair>, gens: Vec<(usize, Vector<F>)>) -> Vec<usize> {
        let ctx = self.ctx;
        pairs.sort_by(|a, b| ctx.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
        self.stats.steps += 1;
        self.stats.pairs_processed += pairs.len();

        let mut lookup = Lookup::new();
        for e in &self.basis {
            lookup.push(&e.v);
        }
        let mut mat = Matrix::new(ctx);
        let mut used: FxHashSet<(usize, Mono)> = FxHashSet::default();
        let n_pair_rows;
        {
            for p in &pairs {
                for k in [p.i, p.j] {
                    let e = &self.basis[k];
                    let m = e.lt.mono.quotient_of(&p.lcm.mono);
                    if !used.insert((k, m)) {
                        continue;
                    }
                    let lead_has_pivot = mat.has_pivot(p.lcm);
                    let row = mat.row_from(&e.v, &m);
                    if lead_has_pivot {
                        mat.todo.push(row);
                    } else {
                        mat.push_pivot(row);
                    }
                }
            }
            n_pair_rows = mat.todo.len();
            for (_, g) in &gens {
                let row = mat.row_from(g, &Mono::ONE);
                mat.todo.push(row);
            }
        }
        mat.preprocess(&lookup);
        mat.sort_columns();
        let (r, c) = mat.shape();
        self.stats.max_rows = self.stats.max_rows.max(r);
        self.stats.max_cols = self.stats.max_cols.max(c);

        let f = ctx.field();
        let mut acc = vec![f.zero(); mat.terms.len()];
        let todo = std::mem::take(&mut mat.todo);
        let mut new_vecs = Vec::new();
        let mut minimal = Vec::new();
        for (k, row) in todo.iter().enumerate() {
            let red = mat.reduce(&mut acc, row, false);
            if red.is_empty() {
                if k < n_pair_rows {
                    self.stats.zero_reductions += 1;
                }
                continue;
            }
            let inv = f.inv(&red[0].1);
            let red: Row<F::Elem> = red.into_iter().map(|(c, v)| (c, f.mul(&v, &inv))).collect();
            new_vecs.push(mat.to_vector(&red));
            mat.push_pivot(red);
            if k >= n_pair_rows {
                minimal.push(gens[k - n_pair_rows].0);
            }
        }
        drop(lookup);
        for v in new_vecs {
            self.insert(v, d);
        }
        minimal
    }

    fn finish(self, minimal_gens: Vec<usize>, complete: bool, resource_capped: bool) -> GbOutcome<F> {
        let ctx = self.ctx;
        let n = self.basis.len();
        let mut keep = Vec::new();
        for i in 0..n {
            let ei = &self.basis[i];
            let dominated = (0..n).any(|j| {
                let ej = &self.basis[j];
                j != i
                    && ej.lt.comp == ei.lt.comp
                    && ej.sev & !ei.sev == 0
                    && ej.lt.mono.divides(&ei.lt.mono)
                    && (ej.lt != ei.lt || j < i)
            });
            if !dominated {
                keep.push(self.basis[i].v.clone());
            }
        }
        let mut basis = reduce_against(ctx, &keep, &keep, true);
        basis.sort_by(|a, b| ctx.cmp(&a[0].0, &b[0].0));
        GbOutcome { basis, minimal_gens, complete, resource_capped, stats: self.stats }
    }
}

/// Gröbner basis of the submodule generated by `gens`.
pub fn compute<F: Field>(ctx: &ModuleCtx<F>, gens: &[Vector<F>], opts: &GbOptions) -> GbOutcome<F> {
    let mut eng = Engine {
        ctx,
        opts,
        basis: Vec::new(),
        pairs: Vec::new(),
        product_criterion: ctx.rank() == 1,
        truncated: false,
        stats: GbStats::default(),
    };
    let mut pending: Vec<(i64, usize, Vector<F>)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let v = ctx.normalize(g.clone());
        if v.is_empty() {
            continue;
        }
        if let Some((k, cap)) = opts.grading_cap {
            if v.iter().any(|(t, _)| ctx.ring.multidegree(&t.mono)[k] > cap) {
                eng.truncated = true;
                continue;
            }
        }
        pending.push((ctx.sugar(&v), i, v));
    }
    pending.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut pending = std::collections::VecDeque::from(pending);

    let mut minimal = Vec::new();
    let mut complete = true;
    loop {
        let dp = eng.pairs.iter().map(|p| p.sugar).min();
        let dg = pending.front().map(|g| g.0);
        let d = match (dp, dg) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.degree_cap.is_some_and(|cap| d > cap) {
            complete = false;
            break;
        }
        let (sel, rest): (Vec<Pair>, Vec<Pair>) =
            std::mem::take(&mut eng.pairs).into_iter().partition(|p| p.sugar == d);
        eng.pairs = rest;
        let mut sel_gens = Vec::new();
        while pending.front().is_some_and(|g| g.0 == d) {
            let (_, i, v) = pending.pop_front().unwrap();
            sel_gens.push((i, v));
        }
        minimal.extend(eng.step(d, sel, sel_gens));
        if opts.max_basis.is_some_and(|m| eng.basis.len() > m) {
            complete = false;
            break;
        }
    }
    let resource_capped = !complete;
    let complete = complete && !eng.truncated;
    minimal.sort_unstable();
    eng.finish(minimal, complete, resource_capped)
}
