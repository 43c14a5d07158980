//! Koszul complexes on minimal generators, their homology, the strongly
//! Cohen–Macaulay verdict, depth of powers, sliding depth and the equivalence
//! harness tying these to the Rees algebra.

mod theorem;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{ModuleCtx, Vector};
use crate::homology::{
    apply_map, kernel_of_map, module_invariants, subquotient, DepthMethod, DepthStrategy, FpModule, ModuleInvariants,
};
use crate::ideal::Ideal;
use crate::linalg::subsets;
use crate::monomial::Term;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub use theorem::{verify_theorem24, Hypotheses, Theorem24Options, Theorem24Report};

/// The Koszul complex `K_*` on a list of homogeneous elements.
///
/// `K_i` has the lexicographically ordered `i`-subsets `S` as basis, twisted by
/// the sum of the degrees in `S`, and `∂(e_S) = Σ_k (-1)^k a_{s_k} e_{S \ s_k}`.
#[derive(Clone, Debug)]
pub struct KoszulComplex<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    bases: Vec<Vec<Vec<usize>>>,
    twists: Vec<Vec<i64>>,
    /// `diffs[i]` holds the columns of `∂_i : K_i -> K_{i-1}`; `diffs[0]` is the
    /// zero map `K_0 -> 0`.
    diffs: Vec<Vec<Vector<F>>>,
}

impl<F: Field> KoszulComplex<F> {
    pub fn new(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        let unit = ModuleCtx::ideal(ring);
        let mut degrees = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_zero() || !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            degrees.push(unit.degree(&ModuleCtx::from_poly(g)[0].0));
        }
        let n = gens.len();
        let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets(n, i)).collect();
        let twists: Vec<Vec<i64>> =
            bases.iter().map(|b| b.iter().map(|s| s.iter().map(|&k| degrees[k]).sum()).collect()).collect();
        let f = ring.field();
        let mut diffs = vec![vec![Vec::new()]];
        for i in 1..=n {
            let index: HashMap<&[usize], u32> =
                bases[i - 1].iter().enumerate().map(|(j, s)| (s.as_slice(), j as u32)).collect();
            let target = ModuleCtx::free(ring, twists[i - 1].clone());
            let cols = bases[i]
                .iter()
                .map(|s| {
                    let mut terms = Vec::new();
                    for (k, &a) in s.iter().enumerate() {
                        let face: Vec<usize> = s.iter().copied().filter(|&b| b != a).collect();
                        let comp = index[face.as_slice()];
                        for (m, c) in gens[a].terms() {
                            let c = if k % 2 == 0 { c.clone() } else { f.neg(c) };
                            terms.push((Term::new(*m, comp), c));
                        }
                    }
                    target.normalize(terms)
                })
                .collect();
            diffs.push(cols);
        }
        Ok(KoszulComplex { ring: ring.clone(), gens: gens.to_vec(), bases, twists, diffs })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Length `n` of the complex.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    pub fn basis(&self, i: usize) -> &[Vec<usize>] {
        &self.bases[i]
    }

    pub fn twists(&self, i: usize) -> &[i64] {
        &self.twists[i]
    }

    /// The free module `K_i`.
    pub fn term(&self, i: usize) -> ModuleCtx<F> {
        ModuleCtx::free(&self.ring, self.twists[i].clone())
    }

    /// Columns of `∂_i`, for `1 <= i <= n`.
    pub fn differential(&self, i: usize) -> &[Vector<F>] {
        &self.diffs[i]
    }

    /// Whether `∂_{i-1} ∘ ∂_i = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (2..=self.len()).all(|i| {
            let target = self.term(i - 2);
            self.diffs[i].iter().all(|c| apply_map(&target, &self.diffs[i - 1], c).is_empty())
        })
    }

    /// `H_i = ker ∂_i / im ∂_{i+1}`, embedded in `K_i`.
    pub fn homology(&self, i: usize) -> Result<FpModule<F>> {
        if i > self.len() {
            return Err(Error::Precondition(format!("homological index {i} exceeds the length {}", self.len())));
        }
        let target = if i == 0 { ModuleCtx::free(&self.ring, Vec::new()) } else { self.term(i - 1) };
        let z = kernel_of_map(&target, &self.diffs[i], &self.twists[i])?;
        let b: &[Vector<F>] = if i < self.len() { &self.diffs[i + 1] } else { &[] };
        subquotient(&z, b)
    }
}

/// Knobs shared by the homology-based checks.
#[derive(Clone, Debug)]
pub struct KoszulOptions {
    pub depth: DepthStrategy,
    pub seed: u64,
    /// Stop at the first nonzero homology module that is not Cohen–Macaulay.
    pub early_exit: bool,
}

impl Default for KoszulOptions {
    fn default() -> Self {
        KoszulOptions { depth: DepthStrategy::Auto, seed: 0, early_exit: false }
    }
}

/// Invariants of one homology module.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyEntry {
    pub i: usize,
    pub zero: bool,
    /// `-1` for the zero module.
    pub dim: i64,
    pub depth: Option<i64>,
    pub depth_lower: i64,
    pub depth_upper: i64,
    /// `None` when the depth bounds leave the question open.
    pub cm: Option<bool>,
    pub method: DepthMethod,
    pub hilbert_numerator: Vec<i64>,
    pub hilbert_shift: i64,
}

impl HomologyEntry {
    fn new(i: usize, inv: &ModuleInvariants) -> Self {
        HomologyEntry {
            i,
            zero: inv.zero,
            dim: inv.dim,
            depth: inv.depth,
            depth_lower: inv.depth_lower,
            depth_upper: inv.depth_upper,
            cm: inv.cm_verdict(),
            method: inv.method,
            hilbert_numerator: inv.hilbert.numerator.clone(),
            hilbert_shift: inv.hilbert.shift,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulHomologyReport {
    /// Number of minimal generators.
    pub n: usize,
    /// Height of the ideal.
    pub g: i64,
    pub generators: Vec<String>,
    pub entries: Vec<HomologyEntry>,
    /// Indices not computed because of an early exit.
    pub missing: Vec<usize>,
    pub h0_matches_quotient: bool,
    /// `Some` only when every index above `n - g` was computed.
    pub vanishing_above_n_minus_g: Option<bool>,
    /// `None` when some index is missing or undecided.
    pub strongly_cm: Option<bool>,
}

fn proper_ideal<F: Field>(ideal: &Ideal<F>) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Precondition("Koszul homology needs a nonzero proper ideal".into()));
    }
    Ok(())
}

/// Koszul homology of a minimal generating set, with the strongly
/// Cohen–Macaulay verdict.
pub fn koszul_homology<F: Field>(ideal: &Ideal<F>, opts: &KoszulOptions) -> Result<KoszulHomologyReport> {
    proper_ideal(ideal)?;
    let ring = ideal.ring();
    let g = ideal.height()?;
    let k = KoszulComplex::new(ring, ideal.mingens())?;
    let n = k.len();
    let mut entries = Vec::new();
    let mut h0_matches = false;
    let mut stopped_at = None;
    for i in 0..=n {
        let h = k.homology(i)?;
        if i == 0 {
            h0_matches = h0_is_quotient(ideal, &h)?;
            if !h0_matches {
                return Err(Error::Invariant("H_0 differs from R/I".into()));
            }
        }
        let inv = module_invariants(&h, opts.depth, opts.seed.wrapping_add(i as u64))?;
        let entry = HomologyEntry::new(i, &inv);
        if i as i64 > n as i64 - g && !entry.zero {
            return Err(Error::Invariant(format!("H_{i} is nonzero above n - g = {}", n as i64 - g)));
        }
        let not_cm = entry.cm == Some(false);
        entries.push(entry);
        if opts.early_exit && not_cm {
            stopped_at = Some(i);
            break;
        }
    }
    let missing: Vec<usize> = stopped_at.map_or(Vec::new(), |s| (s + 1..=n).collect());
    let vanishing = if missing.is_empty() { Some(true) } else { None };
    let strongly_cm = if entries.iter().any(|e| e.cm == Some(false)) {
        Some(false)
    } else if missing.is_empty() && entries.iter().all(|e| e.cm == Some(true)) {
        Some(true)
    } else {
        None
    };
    Ok(KoszulHomologyReport {
        n,
        g,
        generators: ideal.mingens().iter().map(ToString::to_string).collect(),
        entries,
        missing,
        h0_matches_quotient: h0_matches,
        vanishing_above_n_minus_g: vanishing,
        strongly_cm,
    })
}

/// `H_0` is cyclic: compare its Hilbert series and annihilator with `R/I`.
fn h0_is_quotient<F: Field>(ideal: &Ideal<F>, h0: &FpModule<F>) -> Result<bool> {
    if h0.rank() != 1 || h0.hilbert_series() != *ideal.quotient_hilbert() {
        return Ok(false);
    }
    let ctx = h0.ctx();
    let ann: Vec<Polynomial<F>> = h0.relations().iter().map(|r| ctx.component(r, 0)).collect();
    Ideal::new(ideal.ring(), ann)?.same_as(ideal)
}

/// Depth of `R/I^j` against `dim R/I - j + 1`.
#[derive(Clone, Debug, Serialize)]
pub struct PowerDepth {
    pub j: u32,
    pub depth: Option<i64>,
    pub depth_lower: i64,
    pub depth_upper: i64,
    pub cm: Option<bool>,
    pub threshold: i64,
    /// `None` when the depth bounds straddle the threshold.
    pub pass: Option<bool>,
    pub method: DepthMethod,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthProfile {
    pub dim: i64,
    pub j_max: u32,
    pub entries: Vec<PowerDepth>,
    pub first_failure: Option<u32>,
    /// `Some(true)` when every threshold is met, `Some(false)` on a failure.
    pub holds: Option<bool>,
}

/// Depths of `R/I^j` for `1 <= j <= j_max`.
pub fn depth_powers_profile<F: Field>(ideal: &Ideal<F>, j_max: u32, opts: &KoszulOptions) -> Result<DepthProfile> {
    if j_max == 0 {
        return Err(Error::Precondition("depth profile needs j_max >= 1".into()));
    }
    proper_ideal(ideal)?;
    let dim = ideal.dim_quotient()?;
    let mut entries = Vec::new();
    for j in 1..=j_max {
        let power = if j == 1 { ideal.trimmed() } else { ideal.power(j)? };
        let inv = module_invariants(&power.quotient_module(), opts.depth, opts.seed.wrapping_add(j as u64))?;
        if inv.dim != dim || inv.depth_upper > dim {
            return Err(Error::Invariant(format!(
                "R/I^{j} has dim {} and depth bound {} against dim R/I = {dim}",
                inv.dim, inv.depth_upper
            )));
        }
        let threshold = dim - j as i64 + 1;
        let pass = if inv.depth_lower >= threshold {
            Some(true)
        } else if inv.depth_upper < threshold {
            Some(false)
        } else {
            None
        };
        entries.push(PowerDepth {
            j,
            depth: inv.depth,
            depth_lower: inv.depth_lower,
            depth_upper: inv.depth_upper,
            cm: inv.cm_verdict(),
            threshold,
            pass,
            method: inv.method,
        });
    }
    Ok(summarize_profile(dim, j_max, entries))
}

fn summarize_profile(dim: i64, j_max: u32, entries: Vec<PowerDepth>) -> DepthProfile {
    let first_failure = entries.iter().find(|e| e.pass == Some(false)).map(|e| e.j);
    let holds = if first_failure.is_some() {
        Some(false)
    } else if entries.iter().all(|e| e.pass == Some(true)) {
        Some(true)
    } else {
        None
    };
    DepthProfile { dim, j_max, entries, first_failure, holds }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlidingEntry {
    pub j: usize,
    pub zero: bool,
    pub depth_lower: i64,
    pub depth_upper: i64,
    pub threshold: i64,
    pub pass: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlidingDepthReport {
    /// Number of variables.
    pub d: usize,
    pub mu: usize,
    pub entries: Vec<SlidingEntry>,
    pub holds: Option<bool>,
}

/// Sliding depth: `depth H_j(J) >= d - μ(J) + j` for every `j`; zero modules pass.
pub fn sliding_depth_check<F: Field>(j: &Ideal<F>, opts: &KoszulOptions) -> Result<SlidingDepthReport> {
    let full = KoszulOptions { early_exit: false, ..opts.clone() };
    let rep = koszul_homology(j, &full)?;
    let d = j.ring().nvars();
    let entries: Vec<SlidingEntry> = rep
        .entries
        .iter()
        .map(|e| {
            let threshold = d as i64 - rep.n as i64 + e.i as i64;
            let pass = if e.zero || e.depth_lower >= threshold {
                Some(true)
            } else if e.depth_upper < threshold {
                Some(false)
            } else {
                None
            };
            SlidingEntry {
                j: e.i,
                zero: e.zero,
                depth_lower: e.depth_lower,
                depth_upper: e.depth_upper,
                threshold,
                pass,
            }
        })
        .collect();
    let holds = if entries.iter().any(|e| e.pass == Some(false)) {
        Some(false)
    } else if entries.iter().all(|e| e.pass == Some(true)) {
        Some(true)
    } else {
        None
    };
    Ok(SlidingDepthReport { d, mu: rep.n, entries, holds })
}
