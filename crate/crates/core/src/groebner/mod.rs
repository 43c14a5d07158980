//! Gröbner bases of ideals and of submodules of graded free modules, normal
//! forms, syzygies and elimination.

mod check;
mod ctx;
mod engine;

pub use check::{buchberger_violation, is_reduced, naive_reduce, s_vector};
pub use ctx::{ModuleCtx, Vector};
pub use engine::{compute, reduce_against, GbOptions, GbOutcome, GbStats};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Mono, Term};
use crate::order::ModuleOrder;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

fn check_ring<F: Field>(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Result<()> {
    if polys.iter().all(|p| same_ring(ring, p.ring())) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Reduced Gröbner basis of an ideal with respect to its ring's order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    elems: Vec<Polynomial<F>>,
    vecs: Vec<Vector<F>>,
    minimal_gens: Vec<usize>,
    complete: bool,
    resource_capped: bool,
    stats: GbStats,
}

pub fn groebner_basis<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<GroebnerBasis<F>> {
    groebner_basis_with(ring, gens, &GbOptions::default())
}

pub fn groebner_basis_with<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    opts: &GbOptions,
) -> Result<GroebnerBasis<F>> {
    check_ring(ring, gens)?;
    let ctx = ModuleCtx::ideal(ring);
    let input: Vec<Vector<F>> = gens.iter().map(ModuleCtx::from_poly).collect();
    let out = compute(&ctx, &input, opts);
    let elems = out.basis.iter().map(|v| ctx.component(v, 0)).collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elems,
        vecs: out.basis,
        minimal_gens: out.minimal_gens,
        complete: out.complete,
        resource_capped: out.resource_capped,
        stats: out.stats,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Basis elements, monic and sorted by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// False when a cap cut the computation short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when `degree_cap` or `max_basis` (rather than a grading cap) stopped it.
    pub fn is_resource_capped(&self) -> bool {
        self.resource_capped
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// Input positions of a minimal generating subset (meaningful for homogeneous input).
    pub fn minimal_generator_indices(&self) -> &[usize] {
        &self.minimal_gens
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.elems.iter().map(|p| *p.leading_mono().unwrap()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].is_constant()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        Ok(self.normal_forms(std::slice::from_ref(f))?.pop().unwrap())
    }

    pub fn normal_forms(&self, fs: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
        check_ring(&self.ring, fs)?;
        let ctx = ModuleCtx::ideal(&self.ring);
        let targets: Vec<Vector<F>> = fs.iter().map(ModuleCtx::from_poly).collect();
        let red = reduce_against(&ctx, &self.vecs, &targets, false);
        Ok(red.iter().map(|v| ctx.component(v, 0)).collect())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial<F>]) -> Result<bool> {
        Ok(self.normal_forms(fs)?.iter().all(|p| p.is_zero()))
    }

    /// First S-pair failing the Buchberger criterion under naive division.
    pub fn buchberger_violation(&self) -> Option<(usize, usize)> {
        buchberger_violation(&ModuleCtx::ideal(&self.ring), &self.vecs)
    }
}

/// Gröbner basis of a submodule of a free module.
#[derive(Clone, Debug)]
pub struct ModuleGb<F: Field> {
    pub ctx: ModuleCtx<F>,
    pub basis: Vec<Vector<F>>,
    pub minimal_gens: Vec<usize>,
    pub complete: bool,
    pub stats: GbStats,
}

pub fn module_gb<F: Field>(ctx: &ModuleCtx<F>, gens: &[Vector<F>], opts: &GbOptions) -> ModuleGb<F> {
    let out = compute(ctx, gens, opts);
    ModuleGb {
        ctx: ctx.clone(),
        basis: out.basis,
        minimal_gens: out.minimal_gens,
        complete: out.complete,
        stats: out.stats,
    }
}

impl<F: Field> ModuleGb<F> {
    pub fn normal_forms(&self, vs: &[Vector<F>]) -> Vec<Vector<F>> {
        reduce_against(&self.ctx, &self.basis, vs, false)
    }

    pub fn contains(&self, v: &Vector<F>) -> bool {
        self.normal_forms(std::slice::from_ref(v))[0].is_empty()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.basis.iter().map(|v| v[0].0).collect()
    }
}

/// Check that every nonzero column is homogeneous of its declared degree.
pub fn check_homogeneous<F: Field>(ctx: &ModuleCtx<F>, cols: &[Vector<F>], twists: &[i64]) -> Result<()> {
    if cols.len() != twists.len() {
        return Err(Error::ArityMismatch { expected: cols.len(), found: twists.len() });
    }
    for (k, (c, &d)) in cols.iter().zip(twists).enumerate() {
        if c.iter().any(|(t, _)| ctx.degree(t) != d) {
            return Err(Error::Inhomogeneous(format!("column {k} is not homogeneous of degree {d}")));
        }
    }
    Ok(())
}

/// Gröbner basis of the graph of a map `F -> G` sending `e_i` to `cols[i]`.
///
/// Elements are `(v, c)` with `v = sum c_i cols[i]`, ordered so that the `G`-part
/// dominates. Those with vanishing `G`-part generate the kernel, and reducing
/// `(v, 0)` expresses `v` in terms of the columns when possible.
#[derive(Clone, Debug)]
pub struct TrackedGb<F: Field> {
    ext: ModuleCtx<F>,
    target_rank: usize,
    source: ModuleCtx<F>,
    basis: Vec<Vector<F>>,
    pub complete: bool,
    pub stats: GbStats,
}

pub fn tracked_gb<F: Field>(
    ctx: &ModuleCtx<F>,
    cols: &[Vector<F>],
    col_twists: &[i64],
    opts: &GbOptions,
) -> Result<TrackedGb<F>> {
    check_homogeneous(ctx, cols, col_twists)?;
    let r = ctx.rank();
    let mut twists = ctx.twists.clone();
    twists.extend_from_slice(col_twists);
    let ext = ModuleCtx {
        ring: ctx.ring.clone(),
        twists,
        order: ModuleOrder::Elimination { head: r as u32, tail: Box::new(ModuleOrder::TermOverPosition) },
    };
    let f = ctx.field();
    let gens: Vec<Vector<F>> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut v = c.clone();
            v.push((Term::new(Mono::ONE, (r + i) as u32), f.one()));
            v
        })
        .collect();
    let out = compute(&ext, &gens, opts);
    Ok(TrackedGb {
        ext,
        target_rank: r,
        source: ModuleCtx::free(&ctx.ring, col_twists.to_vec()),
        basis: out.basis,
        complete: out.complete,
        stats: out.stats,
    })
}

impl<F: Field> TrackedGb<F> {
    fn tail(&self, v: &Vector<F>) -> Vector<F> {
        let r = self.target_rank as u32;
        v.iter().filter(|(t, _)| t.comp >= r).map(|(t, c)| (Term::new(t.mono, t.comp - r), c.clone())).collect()
    }

    /// Generators of the kernel, as vectors of the source module.
    pub fn syzygies(&self) -> Vec<Vector<F>> {
        let r = self.target_rank as u32;
        self.basis.iter().filter(|v| v[0].0.comp >= r).map(|v| self.tail(v)).collect()
    }

    /// The source module, twisted by the column degrees.
    pub fn source(&self) -> &ModuleCtx<F> {
        &self.source
    }

    /// Gröbner basis of the image, as vectors of the target module.
    pub fn image_basis(&self) -> Vec<Vector<F>> {
        let r = self.target_rank as u32;
        self.basis
            .iter()
            .filter(|v| v[0].0.comp < r)
            .map(|v| v.iter().filter(|(t, _)| t.comp < r).cloned().collect())
            .collect()
    }

    /// Coefficients `c` with `v = sum c_i cols[i]`, if `v` lies in the image.
    pub fn express(&self, targets: &[Vector<F>]) -> Vec<Option<Vector<F>>> {
        let r = self.target_rank as u32;
        let f = self.ext.field();
        let red = reduce_against(&self.ext, &self.basis, targets, false);
        red.iter()
            .map(|v| {
                if v.first().is_some_and(|(t, _)| t.comp < r) {
                    None
                } else {
                    let mut c: Vector<F> = self.tail(v).into_iter().map(|(t, x)| (t, f.neg(&x))).collect();
                    self.source.sort(&mut c);
                    Some(c)
                }
            })
            .collect()
    }
}

/// Generators of the kernel of the map given by `cols`.
pub fn syzygies<F: Field>(ctx: &ModuleCtx<F>, cols: &[Vector<F>], col_twists: &[i64]) -> Result<Vec<Vector<F>>> {
    Ok(tracked_gb(ctx, cols, col_twists, &GbOptions::default())?.syzygies())
}

/// Syzygies of a row of polynomials, each returned as a list of coefficients.
pub fn poly_syzygies<F: Field>(ring: &Ring<F>, row: &[Polynomial<F>]) -> Result<Vec<Vec<Polynomial<F>>>> {
    check_ring(ring, row)?;
    let mut twists = Vec::with_capacity(row.len());
    for p in row {
        let info = p.degree_info();
        if !info.is_homogeneous {
            return Err(Error::Inhomogeneous(p.to_string()));
        }
        twists.push(p.degree().unwrap_or(0) as i64);
    }
    let ctx = ModuleCtx::ideal(ring);
    let cols: Vec<Vector<F>> = row.iter().map(ModuleCtx::from_poly).collect();
    let tr = tracked_gb(&ctx, &cols, &twists, &GbOptions::default())?;
    let src = tr.source().clone();
    Ok(tr.syzygies().iter().map(|s| (0..row.len() as u32).map(|i| src.component(s, i)).collect()).collect())
}

/// Result of eliminating a leading block of variables.
#[derive(Clone, Debug)]
pub struct Elimination<F: Field> {
    /// Basis elements free of the eliminated variables (same ring as the input).
    pub generators: Vec<Polynomial<F>>,
    pub complete: bool,
    pub resource_capped: bool,
    pub stats: GbStats,
}

/// `I ∩ k[remaining variables]` for a ring whose order eliminates the first `block` variables.
pub fn eliminate<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    block: usize,
    opts: &GbOptions,
) -> Result<Elimination<F>> {
    if !ring.order().eliminates(block) {
        return Err(Error::InvalidOrder(format!("order does not eliminate the first {block} variables")));
    }
    let gb = groebner_basis_with(ring, gens, opts)?;
    let generators = gb
        .generators()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| (0..block).all(|i| m.exp(i) == 0)))
        .cloned()
        .collect();
    Ok(Elimination { generators, complete: gb.complete, resource_capped: gb.resource_capped, stats: gb.stats })
}
