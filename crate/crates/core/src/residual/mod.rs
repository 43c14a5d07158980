//! Chains of residual intersections `K_i = (a_1..a_i) : I`, d-sequence tests
//! and exact checks of the identities residual intersections satisfy.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{module_invariants, DepthStrategy};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Height with `None` for the unit ideal (height `∞`).
fn height_or_unit<F: Field>(i: &Ideal<F>) -> Result<Option<i64>> {
    if i.is_unit() {
        Ok(None)
    } else if i.is_zero() {
        Ok(Some(0))
    } else {
        i.height().map(Some)
    }
}

fn at_least(h: Option<i64>, bound: i64) -> bool {
    h.is_none_or(|h| h >= bound)
}

/// `a_1, .., a_s` with the residuals `K_i = a_i : I` and their geometric flags.
#[derive(Clone, Debug)]
pub struct NestedChain<F: Field> {
    pub base: Ideal<F>,
    pub s: usize,
    pub seed: u64,
    /// Draws used, counting the accepted one.
    pub attempts: usize,
    pub elements: Vec<Polynomial<F>>,
    /// `partial[i - 1] = (a_1, .., a_i)`.
    pub partial: Vec<Ideal<F>>,
    /// `residuals[i - 1] = K_i`.
    pub residuals: Vec<Ideal<F>>,
    /// Heights of `K_i`; `None` is the unit ideal.
    pub heights: Vec<Option<i64>>,
    /// `ht(I + K_i) >= i + 1`, for `i <= s`.
    pub geometric: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainSummary {
    pub s: usize,
    pub seed: u64,
    pub attempts: usize,
    pub elements: Vec<String>,
    pub heights: Vec<Option<i64>>,
    pub geometric: Vec<bool>,
}

impl<F: Field> NestedChain<F> {
    pub fn summary(&self) -> ChainSummary {
        ChainSummary {
            s: self.s,
            seed: self.seed,
            attempts: self.attempts,
            elements: self.elements.iter().map(ToString::to_string).collect(),
            heights: self.heights.clone(),
            geometric: self.geometric.clone(),
        }
    }

    /// Whether `K_i` is an `i`-residual intersection for every `i <= s` and a
    /// geometric one for `i <= s - 1`, recomputed from scratch.
    pub fn recheck(&self) -> Result<bool> {
        for i in 1..=self.s {
            let a = Ideal::new(self.base.ring(), self.elements[..i].to_vec())?;
            let k = a.colon(&self.base)?;
            if !k.same_as(&self.residuals[i - 1])? || !at_least(height_or_unit(&k)?, i as i64) {
                return Ok(false);
            }
            if i < self.s && !at_least(height_or_unit(&self.base.sum(&k)?)?, i as i64 + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Draws per seed before giving up on a chain.
pub const CHAIN_ATTEMPTS: usize = 20;

/// Draw `a_1..a_s` as random combinations of the minimal generators until
/// every `K_i` has height at least `i` and `K_i` is geometric for `i < s`.
pub fn build_chain<F: Field>(ideal: &Ideal<F>, s: usize, seed: u64) -> Result<NestedChain<F>> {
    if s == 0 || s > ideal.mu() {
        return Err(Error::Precondition(format!("chain length {s} must lie in [1, mu = {}]", ideal.mu())));
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::Precondition("residual chains need an equigenerated ideal".into()));
    }
    let ring = ideal.ring();
    let mut best: Vec<Option<i64>> = Vec::new();
    for attempt in 1..=CHAIN_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(attempt as u64));
        let elements = ideal.random_combinations(s, &mut rng)?;
        if let Some(chain) = try_chain(ideal, ring, s, seed, attempt, elements, &mut best)? {
            return Ok(chain);
        }
    }
    Err(Error::Precondition(format!(
        "no residual chain of length {s} in {CHAIN_ATTEMPTS} draws; heights reached {best:?}"
    )))
}

fn try_chain<F: Field>(
    ideal: &Ideal<F>,
    ring: &Ring<F>,
    s: usize,
    seed: u64,
    attempt: usize,
    elements: Vec<Polynomial<F>>,
    best: &mut Vec<Option<i64>>,
) -> Result<Option<NestedChain<F>>> {
    let mut partial = Vec::with_capacity(s);
    let mut residuals = Vec::with_capacity(s);
    let mut heights = Vec::with_capacity(s);
    let mut geometric = Vec::with_capacity(s);
    for i in 1..=s {
        let a = Ideal::new(ring, elements[..i].to_vec())?;
        let k = a.colon(ideal)?;
        let h = height_or_unit(&k)?;
        heights.push(h);
        if !at_least(h, i as i64) {
            *best = heights;
            return Ok(None);
        }
        let geo = at_least(height_or_unit(&ideal.sum(&k)?)?, i as i64 + 1);
        geometric.push(geo);
        if i < s && !geo {
            *best = heights;
            return Ok(None);
        }
        partial.push(a);
        residuals.push(k);
    }
    Ok(Some(NestedChain {
        base: ideal.clone(),
        s,
        seed,
        attempts: attempt,
        elements,
        partial,
        residuals,
        heights,
        geometric,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DSequenceMode {
    FixedOrder,
    /// Every permutation when there are at most 720, otherwise `sample` seeded ones.
    Unconditioned {
        sample: usize,
        seed: u64,
    },
}

/// A failing identity `(a_1..a_i) : a_{i+1} a_k != (a_1..a_i) : a_k`, in
/// 1-based positions of the permuted sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSequenceFailure {
    pub permutation: Vec<usize>,
    pub i: usize,
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DSequenceReport {
    pub mode: DSequenceMode,
    pub permutations_checked: usize,
    /// True when only a sample of the permutations was examined.
    pub probabilistic: bool,
    pub holds: bool,
    pub failure: Option<DSequenceFailure>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Exact colon ideals keyed by the set of prefix elements, shared across permutations.
struct ColonCache<'a, F: Field> {
    ring: &'a Ring<F>,
    seq: &'a [Polynomial<F>],
    prefixes: HashMap<u64, Ideal<F>>,
    colons: HashMap<(u64, usize, usize), Ideal<F>>,
}

impl<F: Field> ColonCache<'_, F> {
    fn prefix(&mut self, mask: u64) -> Result<Ideal<F>> {
        if let Some(i) = self.prefixes.get(&mask) {
            return Ok(i.clone());
        }
        let gens = (0..self.seq.len()).filter(|b| mask >> b & 1 == 1).map(|b| self.seq[b].clone()).collect();
        let i = Ideal::new(self.ring, gens)?;
        self.prefixes.insert(mask, i.clone());
        Ok(i)
    }

    /// `(prefix) : a_j a_k`, with `j == usize::MAX` for the colon by `a_k` alone.
    fn colon(&mut self, mask: u64, j: usize, k: usize) -> Result<Ideal<F>> {
        let key = if j != usize::MAX && j > k { (mask, k, j) } else { (mask, j, k) };
        if let Some(i) = self.colons.get(&key) {
            return Ok(i.clone());
        }
        let base = self.prefix(mask)?;
        let f = if j == usize::MAX { self.seq[k].clone() } else { &self.seq[j] * &self.seq[k] };
        let c = base.colon_element(&f)?;
        self.colons.insert(key, c.clone());
        Ok(c)
    }
}

fn check_order<F: Field>(cache: &mut ColonCache<'_, F>, perm: &[usize]) -> Result<Option<(usize, usize)>> {
    let n = perm.len();
    let mut mask = 0u64;
    for i in 0..n {
        for k in i..n {
            let lhs = cache.colon(mask, perm[i], perm[k])?;
            let rhs = cache.colon(mask, usize::MAX, perm[k])?;
            if !lhs.same_as(&rhs)? {
                return Ok(Some((i, k + 1)));
            }
        }
        mask |= 1 << perm[i];
    }
    Ok(None)
}

/// Test the d-sequence identities `(a_1..a_i) : a_{i+1} a_k = (a_1..a_i) : a_k`
/// for `0 <= i < k <= n` by exact colon computations.
pub fn d_sequence_check<F: Field>(
    ring: &Ring<F>,
    seq: &[Polynomial<F>],
    mode: DSequenceMode,
) -> Result<DSequenceReport> {
    const EXHAUSTIVE: usize = 6;
    if seq.len() > 63 {
        return Err(Error::Unsupported("d-sequence tests support at most 63 elements".into()));
    }
    for a in seq {
        if !crate::ring::same_ring(ring, a.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let n = seq.len();
    let (perms, probabilistic) = match mode {
        DSequenceMode::FixedOrder => (vec![(0..n).collect::<Vec<_>>()], false),
        DSequenceMode::Unconditioned { .. } if n <= EXHAUSTIVE => (permutations(n), false),
        DSequenceMode::Unconditioned { sample, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let perms = (0..sample)
                .map(|_| {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.shuffle(&mut rng);
                    p
                })
                .collect();
            (perms, true)
        }
    };
    let mut cache = ColonCache { ring, seq, prefixes: HashMap::new(), colons: HashMap::new() };
    let mut checked = 0;
    for p in &perms {
        checked += 1;
        if let Some((i, k)) = check_order(&mut cache, p)? {
            return Ok(DSequenceReport {
                mode,
                permutations_checked: checked,
                probabilistic,
                holds: false,
                failure: Some(DSequenceFailure { permutation: p.iter().map(|&x| x + 1).collect(), i, k }),
            });
        }
    }
    Ok(DSequenceReport { mode, permutations_checked: checked, probabilistic, holds: true, failure: None })
}

/// One instance of a clause.
#[derive(Clone, Debug, Serialize)]
pub struct ClauseCheck {
    pub i: Option<usize>,
    pub t: Option<u32>,
    pub pass: bool,
    /// False outside the range where the identity is predicted.
    pub in_range: bool,
    /// A generator of one side missing from the other, on failure.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma21Report {
    pub chain: ChainSummary,
    pub g: i64,
    pub t_max: u32,
    /// Largest `t` for which (e) and (f) are predicted: `s - g`.
    pub t_range: i64,
    pub c: Vec<ClauseCheck>,
    pub d: Vec<ClauseCheck>,
    pub e: Vec<ClauseCheck>,
    pub f: Vec<ClauseCheck>,
    /// Every check inside the predicted range passed.
    pub in_range_pass: bool,
    /// Some check lies outside the predicted range; such results are diagnostic only.
    pub diagnostic: bool,
}

/// `None` when the ideals agree, otherwise a generator of one not in the other.
fn difference_witness<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Option<String>> {
    for (x, y) in [(a, b), (b, a)] {
        for gen in x.mingens() {
            if !y.contains(gen)? {
                return Ok(Some(gen.to_string()));
            }
        }
    }
    Ok(None)
}

fn clause<F: Field>(
    i: Option<usize>,
    t: Option<u32>,
    in_range: bool,
    a: &Ideal<F>,
    b: &Ideal<F>,
) -> Result<ClauseCheck> {
    let witness = difference_witness(a, b)?;
    Ok(ClauseCheck { i, t, pass: witness.is_none(), in_range, witness })
}

/// Check, by exact ideal computations:
/// (c) `K_i = a_i : a_{i+1}` for `1 <= i <= s - 1`;
/// (d) `depth R/a_i = d - i` for `1 <= i <= s`;
/// (e) `K_i ∩ I^t = a_i I^{t-1}` for `1 <= i <= s - 1`, `1 <= t <= t_max`;
/// (f) `a I^t : I^t = a` for `1 <= t <= t_max`.
///
/// Values of `t` above `s - g` are evaluated but flagged as diagnostic.
/// The containment `a ⊆ a I^t : I^t` is asserted for every `t`.
pub fn verify_lemma21<F: Field>(chain: &NestedChain<F>, t_max: u32, depth: DepthStrategy) -> Result<Lemma21Report> {
    let ring = chain.base.ring();
    let s = chain.s;
    let d = ring.nvars() as i64;
    let g = chain.base.height()?;
    let t_range = s as i64 - g;
    let mut c = Vec::new();
    for i in 1..s {
        let rhs = chain.partial[i - 1].colon_element(&chain.elements[i])?;
        c.push(clause(Some(i), None, true, &chain.residuals[i - 1], &rhs)?);
    }
    let mut dd = Vec::new();
    for i in 1..=s {
        let inv = module_invariants(&chain.partial[i - 1].quotient_module(), depth, chain.seed.wrapping_add(i as u64))?;
        let want = d - i as i64;
        let pass = inv.depth == Some(want);
        let witness = (!pass).then(|| format!("depth in [{}, {}], expected {want}", inv.depth_lower, inv.depth_upper));
        dd.push(ClauseCheck { i: Some(i), t: None, pass, in_range: true, witness });
    }
    let mut e = Vec::new();
    let mut f = Vec::new();
    let a = &chain.partial[s - 1];
    let mut power = chain.base.trimmed();
    let mut prev_power: Option<Ideal<F>> = None;
    for t in 1..=t_max {
        if t > 1 {
            prev_power = Some(power.clone());
            power = power.product(&chain.base)?;
        }
        let in_range = (t as i64) <= t_range;
        for i in 1..s {
            let lhs = chain.residuals[i - 1].intersection(&power)?;
            let rhs = match &prev_power {
                None => chain.partial[i - 1].clone(),
                Some(p) => chain.partial[i - 1].product(p)?,
            };
            e.push(clause(Some(i), Some(t), in_range, &lhs, &rhs)?);
        }
        let lhs = a.product(&power)?.colon(&power)?;
        if !a.is_subset_of(&lhs)? {
            return Err(Error::Invariant(format!("a is not contained in a I^{t} : I^{t}")));
        }
        f.push(clause(None, Some(t), in_range, &lhs, a)?);
    }
    let all = || c.iter().chain(&dd).chain(&e).chain(&f);
    let in_range_pass = all().filter(|x| x.in_range).all(|x| x.pass);
    let diagnostic = all().any(|x| !x.in_range);
    Ok(Lemma21Report { chain: chain.summary(), g, t_max, t_range, c, d: dd, e, f, in_range_pass, diagnostic })
}
