use std::sync::OnceLock;

use super::hilbert::{combinatorial_dim, monomial_numerator, HilbertSeries};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{check_homogeneous, module_gb, tracked_gb, GbOptions, ModuleCtx, ModuleGb, Vector};
use crate::linalg::Matrix;
use crate::monomial::{Mono, Term};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Generators of a module as elements of an ambient free module.
#[derive(Clone, Debug)]
pub struct Embedding<F: Field> {
    pub ambient: ModuleCtx<F>,
    pub generators: Vec<Vector<F>>,
}

/// A graded module `F / im(relations)` with `F = ⊕ R(-twists[i])`.
#[derive(Debug)]
pub struct FpModule<F: Field> {
    ctx: ModuleCtx<F>,
    relations: Vec<Vector<F>>,
    embedding: Option<Embedding<F>>,
    gb: OnceLock<ModuleGb<F>>,
}

impl<F: Field> Clone for FpModule<F> {
    fn clone(&self) -> Self {
        FpModule {
            ctx: self.ctx.clone(),
            relations: self.relations.clone(),
            embedding: self.embedding.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl<F: Field> FpModule<F> {
    /// Module presented by `relations` (vectors of `⊕ R(-twists[i])`).
    pub fn new(ring: &Ring<F>, twists: Vec<i64>, relations: Vec<Vector<F>>) -> Result<Self> {
        let ctx = ModuleCtx::free(ring, twists);
        let relations: Vec<Vector<F>> =
            relations.into_iter().map(|r| ctx.normalize(r)).filter(|r| !r.is_empty()).collect();
        for r in &relations {
            if r.iter().any(|(t, _)| t.comp as usize >= ctx.rank()) {
                return Err(Error::ArityMismatch {
                    expected: ctx.rank(),
                    found: r.iter().map(|(t, _)| t.comp as usize + 1).max().unwrap(),
                });
            }
        }
        let degs: Vec<i64> = relations.iter().map(|r| ctx.degree(&r[0].0)).collect();
        check_homogeneous(&ctx, &relations, &degs)?;
        Ok(FpModule { ctx, relations, embedding: None, gb: OnceLock::new() })
    }

    pub fn free(ring: &Ring<F>, twists: Vec<i64>) -> Self {
        FpModule { ctx: ModuleCtx::free(ring, twists), relations: Vec::new(), embedding: None, gb: OnceLock::new() }
    }

    /// `R / (gens)`.
    pub fn quotient_ring(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        for g in gens {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
        }
        Self::new(ring, vec![0], gens.iter().map(ModuleCtx::from_poly).collect())
    }

    pub fn with_embedding(mut self, emb: Embedding<F>) -> Result<Self> {
        if emb.generators.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), found: emb.generators.len() });
        }
        self.embedding = Some(emb);
        Ok(self)
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ctx.ring
    }

    pub fn ctx(&self) -> &ModuleCtx<F> {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.ctx.rank()
    }

    pub fn twists(&self) -> &[i64] {
        &self.ctx.twists
    }

    pub fn relations(&self) -> &[Vector<F>] {
        &self.relations
    }

    pub fn embedding(&self) -> Option<&Embedding<F>> {
        self.embedding.as_ref()
    }

    pub fn relation_degrees(&self) -> Vec<i64> {
        self.relations.iter().map(|r| self.ctx.degree(&r[0].0)).collect()
    }

    /// Gröbner basis of the relation module (cached).
    pub fn relation_gb(&self) -> &ModuleGb<F> {
        self.gb.get_or_init(|| module_gb(&self.ctx, &self.relations, &GbOptions::default()))
    }

    /// Leading monomials of the relation basis, component by component.
    fn initial_ideals(&self) -> Vec<Vec<Mono>> {
        let mut per = vec![Vec::new(); self.rank()];
        for t in self.relation_gb().leading_terms() {
            per[t.comp as usize].push(t.mono);
        }
        per
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let w = self.ring().weights().to_vec();
        let mut hs = HilbertSeries::zero(w.clone());
        for (c, mons) in self.initial_ideals().iter().enumerate() {
            let num = monomial_numerator(mons, &w);
            hs = hs.add(&HilbertSeries::new(self.ctx.twists[c], num, w.clone()));
        }
        hs
    }

    /// Dimension from the initial module: the largest dimension of a component.
    pub fn combinatorial_dim(&self) -> i64 {
        let n = self.ring().nvars();
        self.initial_ideals().iter().map(|m| combinatorial_dim(m, n)).max().unwrap_or(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.relation_gb().leading_terms().iter().filter(|t| t.mono.is_one()).count() == self.rank()
    }

    /// Equivalent presentation without unit entries and with a minimal set of relations.
    pub fn minimal_presentation(&self) -> Result<FpModule<F>> {
        let ctx = &self.ctx;
        let f = ctx.field();
        let mut rels = self.relations.clone();
        let mut alive = vec![true; self.rank()];
        loop {
            let hit = rels
                .iter()
                .enumerate()
                .find_map(|(k, r)| r.iter().find(|(t, _)| t.mono.is_one()).map(|(t, c)| (k, t.comp, c.clone())));
            let Some((k, j, c)) = hit else { break };
            let pivot = rels.swap_remove(k);
            let inv = f.inv(&c);
            for r in rels.iter_mut() {
                let coef = ctx.component(r, j);
                if coef.is_zero() {
                    continue;
                }
                let scaled = coef.scalar_mul(&f.neg(&inv));
                let add = ctx.mul_poly(&pivot, &scaled);
                *r = ctx.normalize(r.iter().cloned().chain(add).collect());
                debug_assert!(r.iter().all(|(t, _)| t.comp != j));
            }
            rels.retain(|r| !r.is_empty());
            alive[j as usize] = false;
        }
        let keep: Vec<usize> = (0..self.rank()).filter(|&i| alive[i]).collect();
        let mut new_index = vec![u32::MAX; self.rank()];
        for (n, &o) in keep.iter().enumerate() {
            new_index[o] = n as u32;
        }
        let twists: Vec<i64> = keep.iter().map(|&i| ctx.twists[i]).collect();
        let sub = ModuleCtx::free(self.ring(), twists.clone());
        let rels: Vec<Vector<F>> = rels
            .into_iter()
            .map(|r| {
                let mut v: Vector<F> =
                    r.into_iter().map(|(t, c)| (Term::new(t.mono, new_index[t.comp as usize]), c)).collect();
                sub.sort(&mut v);
                v
            })
            .collect();
        let trimmed = trim(&sub, &rels);
        let embedding = self.embedding.as_ref().map(|e| Embedding {
            ambient: e.ambient.clone(),
            generators: keep.iter().map(|&i| e.generators[i].clone()).collect(),
        });
        Ok(FpModule { ctx: sub, relations: trimmed, embedding, gb: OnceLock::new() })
    }
}

/// A minimal homogeneous generating subset of a submodule.
pub fn trim<F: Field>(ctx: &ModuleCtx<F>, gens: &[Vector<F>]) -> Vec<Vector<F>> {
    let gb = module_gb(ctx, gens, &GbOptions::default());
    gb.minimal_gens.iter().map(|&i| ctx.normalize(gens[i].clone())).collect()
}

/// The kernel of the map `⊕ R(-col_twists[i]) -> target` given by `cols`.
pub fn kernel_of_map<F: Field>(target: &ModuleCtx<F>, cols: &[Vector<F>], col_twists: &[i64]) -> Result<FpModule<F>> {
    let tr = tracked_gb(target, cols, col_twists, &GbOptions::default())?;
    let src = tr.source().clone();
    let gens = trim(&src, &tr.syzygies());
    let twists: Vec<i64> = gens.iter().map(|g| src.degree(&g[0].0)).collect();
    let relations = if gens.is_empty() { Vec::new() } else { tr_syz(&src, &gens, &twists)? };
    let m = FpModule::new(&src.ring, twists, relations)?;
    m.with_embedding(Embedding { ambient: src, generators: gens })
}

fn tr_syz<F: Field>(ctx: &ModuleCtx<F>, cols: &[Vector<F>], twists: &[i64]) -> Result<Vec<Vector<F>>> {
    let tr = tracked_gb(ctx, cols, twists, &GbOptions::default())?;
    Ok(trim(tr.source(), &tr.syzygies()))
}

/// `Z / B` where `Z` carries an embedding and `B` is given by generators in the
/// same ambient module.
pub fn subquotient<F: Field>(z: &FpModule<F>, b: &[Vector<F>]) -> Result<FpModule<F>> {
    let emb = z.embedding().ok_or_else(|| Error::Precondition("subquotient needs an embedded module".into()))?;
    let amb = &emb.ambient;
    let zt = z.twists().to_vec();
    let b: Vec<Vector<F>> = b.iter().map(|v| amb.normalize(v.clone())).filter(|v| !v.is_empty()).collect();
    let bt: Vec<i64> = b.iter().map(|v| amb.degree(&v[0].0)).collect();
    let tr = tracked_gb(amb, &emb.generators, &zt, &GbOptions::default())?;
    if tr.express(&b).iter().any(Option::is_none) {
        return Err(Error::Precondition("submodule is not contained in the cycle module".into()));
    }
    // Relations of Z/B: coefficient vectors c with sum c_i z_i in B, i.e. the
    // first block of the syzygies of [Z | B].
    let mut cols = emb.generators.clone();
    cols.extend(b.iter().cloned());
    let mut twists = zt.clone();
    twists.extend(&bt);
    let tr = tracked_gb(amb, &cols, &twists, &GbOptions::default())?;
    let r = zt.len() as u32;
    let rels: Vec<Vector<F>> = tr
        .syzygies()
        .into_iter()
        .map(|s| s.into_iter().filter(|(t, _)| t.comp < r).collect::<Vector<F>>())
        .filter(|s| !s.is_empty())
        .collect();
    let src = ModuleCtx::free(z.ring(), zt.clone());
    let rels = trim(&src, &rels);
    let m = FpModule::new(z.ring(), zt, rels)?;
    m.with_embedding(emb.clone())
}

/// Apply the map with the given columns to a vector of its source.
pub fn apply_map<F: Field>(target: &ModuleCtx<F>, cols: &[Vector<F>], v: &Vector<F>) -> Vector<F> {
    let f = target.field();
    let mut terms = Vec::new();
    for (t, c) in v {
        for (s, d) in &cols[t.comp as usize] {
            terms.push((s.times(&t.mono), f.mul(c, d)));
        }
    }
    target.normalize(terms)
}

/// Largest graded piece the degree-wise socle search will handle.
pub const SOCLE_PIECE_CAP: usize = 8000;

/// Modules up to this `rank * nvars` get the exact syzygy-based socle test.
pub const SOCLE_EXACT_CAP: usize = 96;

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u16>> {
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(nvars - 1, d - a) {
            rest.insert(0, a as u16);
            out.push(rest);
        }
    }
    out
}

/// Standard terms of `M` in degree `d`, indexed.
fn standard_terms<F: Field>(m: &FpModule<F>, d: i64, lead: &[Term]) -> Vec<Term> {
    let ring = m.ring();
    let mut out = Vec::new();
    for (comp, &tw) in m.twists().iter().enumerate() {
        let e = d - tw;
        if e < 0 {
            continue;
        }
        for exps in monomials_of_degree(ring.nvars(), e as u32) {
            let t = Term::new(ring.mono(&exps), comp as u32);
            if !lead.iter().any(|l| l.divides(&t)) {
                out.push(t);
            }
        }
    }
    out
}

/// Degree of a nonzero socle element found by linear algebra on the graded
/// pieces `M_d`, `M_{d+1}`, searched upward from the lowest generator degree
/// through `max_degree`; `None` when none was found or a piece exceeds
/// [`SOCLE_PIECE_CAP`].
pub fn socle_degree_search<F: Field>(m: &FpModule<F>, max_degree: i64) -> Result<Option<i64>> {
    if m.is_zero() {
        return Ok(None);
    }
    let ring = m.ring();
    if !ring.is_standard_graded() {
        return Err(Error::Unsupported("graded socle search needs a standard graded ring".into()));
    }
    let f = ring.field();
    let gb = m.relation_gb();
    let lead = gb.leading_terms();
    let lo = m.twists().iter().copied().min().unwrap_or(0);
    let mut piece = standard_terms(m, lo, &lead);
    for d in lo..=max_degree {
        let next = standard_terms(m, d + 1, &lead);
        if piece.len() > SOCLE_PIECE_CAP || next.len() > SOCLE_PIECE_CAP {
            return Ok(None);
        }
        if !piece.is_empty() {
            let index: std::collections::HashMap<Term, usize> = next.iter().enumerate().map(|(i, t)| (*t, i)).collect();
            // kernel of multiplication by x_0, then cut down variable by variable
            let mut kernel: Vec<Vec<F::Elem>> = (0..piece.len())
                .map(|j| (0..piece.len()).map(|i| if i == j { f.one() } else { f.zero() }).collect())
                .collect();
            for v in 0..ring.nvars() {
                if kernel.is_empty() {
                    break;
                }
                let x = ring.var_mono(v);
                let images: Vec<Vector<F>> =
                    gb.normal_forms(&piece.iter().map(|t| vec![(t.times(&x), f.one())]).collect::<Vec<_>>());
                let mut mat = Matrix::zeros(f, next.len(), kernel.len());
                for (k, basis) in kernel.iter().enumerate() {
                    for (j, c) in basis.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        for (t, a) in &images[j] {
                            let i = *index
                                .get(t)
                                .ok_or_else(|| Error::Invariant("normal form left a leading term".into()))?;
                            let cur = mat.get(i, k).clone();
                            mat.set(i, k, f.add(&cur, &f.mul(a, c)));
                        }
                    }
                }
                kernel = mat
                    .null_space(f)
                    .into_iter()
                    .map(|w| {
                        let mut out = vec![f.zero(); piece.len()];
                        for (k, c) in w.iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            for (j, b) in kernel[k].iter().enumerate() {
                                out[j] = f.add(&out[j], &f.mul(c, b));
                            }
                        }
                        out
                    })
                    .collect();
            }
            if !kernel.is_empty() {
                return Ok(Some(d));
            }
        }
        piece = next;
    }
    Ok(None)
}

/// Whether `M` has a socle: `Some` when decided, by the degree-wise search
/// (up to the relation degrees plus `slack`) or, for small modules, by
/// [`has_socle`]; `None` otherwise.
pub fn socle_verdict<F: Field>(m: &FpModule<F>, slack: i64) -> Result<Option<bool>> {
    if m.is_zero() {
        return Ok(Some(false));
    }
    let top = m.relation_gb().basis.iter().map(|v| m.ctx().degree(&v[0].0)).max().unwrap_or(0);
    let top = top.max(m.twists().iter().copied().max().unwrap_or(0)) + slack;
    if socle_degree_search(m, top)?.is_some() {
        return Ok(Some(true));
    }
    if m.rank() * m.ring().nvars() <= SOCLE_EXACT_CAP {
        return has_socle(m).map(Some);
    }
    Ok(None)
}

/// Whether `M` has a nonzero element killed by every variable, i.e. whether the
/// maximal ideal is associated to `M`.
pub fn has_socle<F: Field>(m: &FpModule<F>) -> Result<bool> {
    let ring = m.ring();
    let n = ring.nvars();
    let r = m.rank();
    if m.is_zero() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }
    // v -> (x_1 v, ..., x_n v) into (F / U)^n; its kernel is (U :_F m).
    let tw: Vec<i64> = (0..n).flat_map(|_| m.twists().iter().map(|t| t - 1)).collect();
    let big = ModuleCtx::free(ring, tw);
    let block = |j: usize, v: &Vector<F>| -> Vector<F> {
        big.normalize(v.iter().map(|(t, c)| (Term::new(t.mono, t.comp + (j * r) as u32), c.clone())).collect())
    };
    let mut cols: Vec<Vector<F>> = Vec::new();
    for k in 0..r {
        let terms = (0..n).map(|j| (Term::new(ring.var_mono(j), (j * r + k) as u32), ring.field().one())).collect();
        cols.push(big.normalize(terms));
    }
    for j in 0..n {
        for u in m.relations() {
            cols.push(block(j, u));
        }
    }
    let twists: Vec<i64> = cols.iter().map(|c| big.degree(&c[0].0)).collect();
    let tr = tracked_gb(&big, &cols, &twists, &GbOptions::default())?;
    let gb = m.relation_gb();
    for s in tr.syzygies() {
        let v: Vector<F> = m.ctx().normalize(s.into_iter().filter(|(t, _)| (t.comp as usize) < r).collect());
        if !v.is_empty() && !gb.contains(&v) {
            return Ok(true);
        }
    }
    Ok(false)
}
