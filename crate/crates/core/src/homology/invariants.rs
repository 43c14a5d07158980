use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hilbert::HilbertSeries;
use super::module::{socle_verdict, FpModule};
use super::resolution::{minimal_resolution, BettiTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{ModuleCtx, Vector};
use crate::monomial::Term;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{mk_ring, Grading, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthMethod {
    /// `n - pd` from a minimal free resolution.
    Resolution,
    /// Maximal regular sequence of linear forms, each certified by Hilbert
    /// series, closed off by a socle test on the final cut.
    Sections,
}

/// Dimension, depth and Cohen–Macaulayness of a graded module.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleInvariants {
    pub zero: bool,
    pub dim: i64,
    /// Exact depth when known.
    pub depth: Option<i64>,
    pub depth_lower: i64,
    pub depth_upper: i64,
    pub pd: Option<usize>,
    pub is_cm: bool,
    pub method: DepthMethod,
    pub hilbert: HilbertSeries,
    pub betti: Option<BettiTable>,
}

impl ModuleInvariants {
    fn zero_module(hs: HilbertSeries, method: DepthMethod) -> Self {
        ModuleInvariants {
            zero: true,
            dim: -1,
            depth: None,
            depth_lower: -1,
            depth_upper: -1,
            pd: None,
            is_cm: true,
            method,
            hilbert: hs,
            betti: None,
        }
    }
}

/// Hilbert series and dimension, with both dimension routes cross-checked.
pub fn hilbert_and_dim<F: Field>(m: &FpModule<F>) -> Result<(HilbertSeries, i64)> {
    let hs = m.hilbert_series();
    let dim = hs.dim();
    let comb = m.combinatorial_dim();
    if dim != comb {
        return Err(Error::Invariant(format!("Hilbert dimension {dim} differs from combinatorial dimension {comb}")));
    }
    Ok((hs, dim))
}

/// Invariants from a minimal free resolution, stopping after `length_cap` maps.
pub fn dim_depth_cm<F: Field>(m: &FpModule<F>, length_cap: Option<usize>) -> Result<ModuleInvariants> {
    let (hs, dim) = hilbert_and_dim(m)?;
    if hs.is_zero() {
        return Ok(ModuleInvariants::zero_module(hs, DepthMethod::Resolution));
    }
    let n = m.ring().nvars() as i64;
    let res = minimal_resolution(m, length_cap)?;
    let betti = res.betti();
    match res.pd() {
        Some(pd) => {
            let depth = n - pd as i64;
            if res.hilbert_series() != hs {
                return Err(Error::Invariant("resolution and initial module disagree on the Hilbert series".into()));
            }
            if depth > dim || depth < 0 {
                return Err(Error::Invariant(format!("depth {depth} outside [0, dim = {dim}]")));
            }
            Ok(ModuleInvariants {
                zero: false,
                dim,
                depth: Some(depth),
                depth_lower: depth,
                depth_upper: depth,
                pd: Some(pd),
                is_cm: depth == dim,
                method: DepthMethod::Resolution,
                hilbert: hs,
                betti: Some(betti),
            })
        }
        None => {
            let upper = (n - res.length() as i64 - 1).min(dim);
            Ok(ModuleInvariants {
                zero: false,
                dim,
                depth: None,
                depth_lower: 0,
                depth_upper: upper,
                pd: None,
                is_cm: false,
                method: DepthMethod::Resolution,
                hilbert: hs,
                betti: Some(betti),
            })
        }
    }
}

/// `M / l M` for the linear form `l = x_v - sum c_b x_b`, presented over the
/// ring without `x_v` (so `x_v` is replaced by the combination).
pub fn cut_by_form<F: Field>(m: &FpModule<F>, v: usize, combo: &[(usize, F::Elem)]) -> Result<FpModule<F>> {
    let ring = m.ring();
    let n = ring.nvars();
    if v >= n || combo.iter().any(|&(b, _)| b == v || b >= n) {
        return Err(Error::Precondition("linear form must solve for a variable it does not reuse".into()));
    }
    let names: Vec<&str> = (0..n).filter(|&i| i != v).map(|i| ring.names()[i].as_str()).collect();
    let small: Ring<F> = mk_ring(ring.field().clone(), &names, Grading::Standard, MonomialOrder::DegRevLex)?;
    let new_index = |i: usize| if i < v { i } else { i - 1 };
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| {
            if i == v {
                Polynomial::from_terms(
                    &small,
                    combo.iter().map(|(b, c)| (small.var_mono(new_index(*b)), c.clone())).collect(),
                )
            } else {
                Polynomial::var(&small, new_index(i))
            }
        })
        .collect();
    let ctx = m.ctx();
    let small_ctx = ModuleCtx::free(&small, m.twists().to_vec());
    let mut rels = Vec::new();
    for r in m.relations() {
        let mut terms: Vector<F> = Vec::new();
        for comp in 0..m.rank() as u32 {
            let p = ctx.component(r, comp);
            if p.is_zero() {
                continue;
            }
            for (mono, c) in p.substitute(&small, &images)?.into_terms() {
                terms.push((Term::new(mono, comp), c));
            }
        }
        let v = small_ctx.normalize(terms);
        if !v.is_empty() {
            rels.push(v);
        }
    }
    FpModule::new(&small, m.twists().to_vec(), rels)
}

/// Candidate linear forms, sparsest first: a variable, a binomial, a dense form.
fn candidate_form<F: Field>(f: &F, n: usize, kind: usize, rng: &mut ChaCha8Rng) -> (usize, Vec<(usize, F::Elem)>) {
    let v = rng.gen_range(0..n);
    let others: Vec<usize> = (0..n).filter(|&b| b != v).collect();
    let coeff = |rng: &mut ChaCha8Rng| loop {
        let c = f.random(rng);
        if !f.is_zero(&c) {
            break c;
        }
    };
    let combo = match kind {
        0 => Vec::new(),
        1 if !others.is_empty() => vec![(others[rng.gen_range(0..others.len())], coeff(rng))],
        _ => others.iter().map(|&b| (b, coeff(rng))).collect(),
    };
    (v, combo)
}

/// Depth by building a maximal regular sequence of linear forms (standard
/// graded rings only).
///
/// Every form is certified regular by `HS(M/lM) = (1-t) HS(M)`. Sparse forms
/// are tried before dense ones. When no candidate is regular, a nonzero socle
/// of the current cut pins the depth exactly, since cutting by a regular
/// sequence lowers depth by its length.
pub fn depth_by_sections<F: Field>(m: &FpModule<F>, seed: u64) -> Result<ModuleInvariants> {
    // Forms tried per step before the socle test: two variables, two
    // binomials, one dense form; then extra dense forms if the socle is zero.
    const FIRST: [usize; 5] = [0, 0, 1, 1, 2];
    const RETRIES: usize = 3;
    // Degrees past the top relation degree searched for socle elements.
    const SOCLE_SLACK: i64 = 2;
    let ring = m.ring();
    if !ring.is_standard_graded() {
        return Err(Error::Unsupported("linear sections need a standard graded ring".into()));
    }
    let (hs, dim) = hilbert_and_dim(m)?;
    if hs.is_zero() {
        return Ok(ModuleInvariants::zero_module(hs, DepthMethod::Sections));
    }
    let n = ring.nvars();
    let f = ring.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = m.clone();
    let mut prev = hs.clone();
    let mut depth = 0i64;
    let mut exact = None;
    'steps: while depth < dim {
        let nv = cur.ring().nvars();
        let mut socle_checked = false;
        let kinds = FIRST.iter().copied().chain(std::iter::repeat_n(2, RETRIES));
        for (attempt, kind) in kinds.enumerate() {
            if attempt == FIRST.len() {
                if socle_verdict(&cur, SOCLE_SLACK)? == Some(true) {
                    exact = Some(depth);
                    break 'steps;
                }
                socle_checked = true;
            }
            let (v, combo) = candidate_form(&f, nv, kind, &mut rng);
            let cut = cut_by_form(&cur, v, &combo)?;
            let h = cut.hilbert_series();
            if h.shift == prev.shift && h.numerator == prev.numerator {
                cur = cut;
                prev = h;
                depth += 1;
                continue 'steps;
            }
        }
        debug_assert!(socle_checked);
        break;
    }
    if depth == dim {
        exact = Some(depth);
    }
    let (lower, upper) = match exact {
        Some(d) => (d, d),
        None => (depth, dim),
    };
    Ok(ModuleInvariants {
        zero: false,
        dim,
        depth: exact,
        depth_lower: lower,
        depth_upper: upper,
        pd: exact.map(|d| n - d as usize),
        is_cm: exact == Some(dim),
        method: DepthMethod::Sections,
        hilbert: hs,
        betti: None,
    })
}

/// How [`module_invariants`] obtains the depth.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthStrategy {
    Resolution,
    Sections,
    /// Resolutions in few variables, linear sections otherwise.
    #[default]
    Auto,
}

/// Rings with at most this many variables use resolutions under `Auto`.
pub const AUTO_RESOLUTION_VARS: usize = 6;

/// Dimension, depth and Cohen–Macaulayness by the chosen strategy.
pub fn module_invariants<F: Field>(m: &FpModule<F>, strategy: DepthStrategy, seed: u64) -> Result<ModuleInvariants> {
    let ring = m.ring();
    let use_resolution = match strategy {
        DepthStrategy::Resolution => true,
        DepthStrategy::Sections => false,
        DepthStrategy::Auto => ring.nvars() <= AUTO_RESOLUTION_VARS || !ring.is_standard_graded(),
    };
    if use_resolution {
        dim_depth_cm(m, None)
    } else {
        depth_by_sections(m, seed)
    }
}

impl ModuleInvariants {
    /// `Some(true)` / `Some(false)` when the depth bounds decide Cohen–Macaulayness.
    pub fn cm_verdict(&self) -> Option<bool> {
        if self.zero || self.depth_lower == self.dim {
            Some(true)
        } else if self.depth_upper < self.dim {
            Some(false)
        } else {
            None
        }
    }
}
