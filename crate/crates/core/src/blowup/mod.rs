//! Rees algebra equations, the symmetric algebra, fiber cone, analytic spread
//! and minimal reductions.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{eliminate, poly_syzygies, GbOptions, GbStats};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::order::{InnerOrder, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Grading, PolyRing, Ring};

/// Caps for the elimination that produces the Rees equations.
#[derive(Clone, Debug, Default)]
pub struct ReesOptions {
    /// Only equations of `T`-degree at most this are computed.
    pub t_degree_cap: Option<u32>,
    pub max_basis: Option<usize>,
}

/// `Q = ker(R[T_1..T_n] -> R[It], T_j -> a_j t)` together with its linear part.
#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    /// The base ideal with its minimal generators `a_1..a_n` as generator list.
    pub base: Ideal<F>,
    pub degrees: Vec<u32>,
    /// `R[T]`, bigraded by `deg x_i = (w_i, 0)`, `deg T_j = (d_j, 1)`.
    pub ring: Ring<F>,
    pub q: Ideal<F>,
    pub q1: Ideal<F>,
    /// False when a cap truncated the elimination.
    pub complete: bool,
    pub t_degree_cap: Option<u32>,
    /// Sorted `(x-degree, T-degree)` of the minimal generators of `Q`.
    pub min_gen_bidegrees: Vec<(u32, u32)>,
    pub stats: GbStats,
}

fn fresh_prefix(ring: &PolyRing<impl Field>, base: &str) -> String {
    let mut p = base.to_string();
    while ring.names().iter().any(|n| n.starts_with(&p)) {
        p.push('_');
    }
    p
}

/// `R[T_1..T_n]` for an ideal with the given generator degrees; when `with_t` is
/// set, a first variable `t` of bidegree `(0, 1)` is added and eliminated first.
fn rees_ring<F: Field>(base: &Ring<F>, degrees: &[u32], with_t: bool) -> Result<Ring<F>> {
    if base.grading_rank() != 1 {
        return Err(Error::Unsupported("Rees rings need a singly graded base ring".into()));
    }
    let n = base.nvars();
    let tp = fresh_prefix(base, "T");
    let mut names: Vec<String> = Vec::new();
    let mut grading: Vec<Vec<u32>> = Vec::new();
    if with_t {
        names.push(fresh_prefix(base, "t"));
        grading.push(vec![0, 1]);
    }
    names.extend(base.names().iter().cloned());
    grading.extend(base.weights().iter().map(|&w| vec![w, 0]));
    for (j, &d) in degrees.iter().enumerate() {
        names.push(format!("{tp}{}", j + 1));
        grading.push(vec![d, 1]);
    }
    let m = n + degrees.len();
    let order = if with_t {
        MonomialOrder::Block(vec![(1, InnerOrder::DegRevLex), (m, InnerOrder::DegRevLex)])
    } else {
        MonomialOrder::DegRevLex
    };
    Ok(Arc::new(PolyRing::new(base.field().clone(), names, Grading::Multi(grading), order)?))
}

/// Leading-term bidegree `(x-degree, T-degree)`; exact for bihomogeneous
/// elements of equigenerated ideals.
fn bidegree<F: Field>(p: &Polynomial<F>, nbase: usize) -> (u32, u32) {
    let m = p.leading_mono().expect("nonzero");
    let exps = m.exps();
    let dx: u32 = exps[..nbase].iter().map(|&e| e as u32).sum();
    let dt: u32 = exps[nbase..p.ring().nvars()].iter().map(|&e| e as u32).sum();
    (dx, dt)
}

fn base_images<F: Field>(base: &Ring<F>, offset: usize) -> Vec<usize> {
    (0..base.nvars()).map(|i| i + offset).collect()
}

/// `Q_1`: the forms `sum c_j T_j` for the minimal syzygies `c` of the generators.
pub fn sym_linear_part<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    let base = ideal.trimmed();
    let degrees: Vec<u32> = base.gens().iter().map(|g| g.degree().unwrap()).collect();
    let rt = rees_ring(ideal.ring(), &degrees, false)?;
    linear_part_in(&base, &rt)
}

fn linear_part_in<F: Field>(base: &Ideal<F>, rt: &Ring<F>) -> Result<Ideal<F>> {
    let n = base.ring().nvars();
    let map = base_images(base.ring(), 0);
    let syz = poly_syzygies(base.ring(), base.gens())?;
    let forms = syz
        .iter()
        .map(|s| {
            s.iter().enumerate().fold(Polynomial::zero(rt), |acc, (j, c)| {
                &acc + &(&c.rename_into(rt, &map) * &Polynomial::var(rt, n + j))
            })
        })
        .collect();
    Ideal::new(rt, forms)
}

/// The Rees equations by eliminating `t` from `(T_j - a_j t)`.
pub fn rees_ideal<F: Field>(ideal: &Ideal<F>, opts: &ReesOptions) -> Result<ReesPresentation<F>> {
    if ideal.is_zero() {
        return Err(Error::Precondition("Rees algebra of the zero ideal".into()));
    }
    let base = ideal.trimmed();
    let degrees: Vec<u32> = base.gens().iter().map(|g| g.degree().unwrap()).collect();
    let br = base.ring().clone();
    let n = br.nvars();
    let mu = degrees.len();
    let big = rees_ring(&br, &degrees, true)?;
    let rt = rees_ring(&br, &degrees, false)?;
    let into_big = base_images(&br, 1);
    let t = Polynomial::var(&big, 0);
    let gens: Vec<Polynomial<F>> = base
        .gens()
        .iter()
        .enumerate()
        .map(|(j, a)| &Polynomial::var(&big, 1 + n + j) - &(&a.rename_into(&big, &into_big) * &t))
        .collect();
    let gb_opts = GbOptions {
        degree_cap: None,
        grading_cap: opts.t_degree_cap.map(|c| (1, c as i64)),
        max_basis: opts.max_basis,
    };
    let elim = eliminate(&big, &gens, 1, &gb_opts)?;
    if elim.resource_capped {
        return Err(Error::ResourceCap("Rees elimination stopped at the basis size cap".into()));
    }
    let back: Vec<usize> = std::iter::once(0).chain(0..n + mu).collect();
    let q_gens: Vec<Polynomial<F>> = elim.generators.iter().map(|p| p.rename_into(&rt, &back)).collect();

    // Every equation must vanish under T_j -> a_j t.
    let mut images: Vec<Polynomial<F>> = (0..n).map(|i| Polynomial::var(&big, i + 1)).collect();
    images.extend(gens.iter().enumerate().map(|(j, g)| &Polynomial::var(&big, 1 + n + j) - g));
    for g in &q_gens {
        if !g.substitute(&big, &images)?.is_zero() {
            return Err(Error::Invariant(format!("Rees equation {g} does not vanish on the Rees algebra")));
        }
    }

    let q = Ideal::new(&rt, q_gens)?.trimmed();
    let q1 = linear_part_in(&base, &rt)?;
    if !q1.is_subset_of(&q)? {
        return Err(Error::Invariant("linear part of the Rees ideal is not contained in it".into()));
    }
    let mut bideg: Vec<(u32, u32)> = q.gens().iter().map(|g| bidegree(g, n)).collect();
    bideg.sort_unstable();
    Ok(ReesPresentation {
        base,
        degrees,
        ring: rt,
        q,
        q1,
        complete: elim.complete,
        t_degree_cap: opts.t_degree_cap,
        min_gen_bidegrees: bideg,
        stats: elim.stats,
    })
}

/// Outcome of the "equations up to degree r are linear" test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygeticRange {
    pub r: u32,
    pub holds: bool,
    pub first_failure_degree: Option<u32>,
}

/// Whether no minimal equation of `Q` has `T`-degree in `[2, r]`.
pub fn syzygetic_range<F: Field>(p: &ReesPresentation<F>, r: u32) -> Result<SyzygeticRange> {
    if !p.complete && p.t_degree_cap.is_none_or(|c| c < r) {
        return Err(Error::Precondition(format!("Rees equations not computed through T-degree {r}")));
    }
    let first = p.min_gen_bidegrees.iter().map(|b| b.1).filter(|&d| (2..=r).contains(&d)).min();
    Ok(SyzygeticRange { r, holds: first.is_none(), first_failure_degree: first })
}

impl<F: Field> ReesPresentation<F> {
    /// Whether `Q = Q_1` (only meaningful for a complete presentation).
    pub fn is_linear_type(&self) -> Result<bool> {
        if !self.complete {
            return Err(Error::Precondition("linear type needs the complete Rees ideal".into()));
        }
        self.q.is_subset_of(&self.q1)
    }

    /// The fiber cone ideal `(Q + (x)) / (x)` in `k[T]`.
    pub fn fiber_ideal(&self) -> Result<Ideal<F>> {
        if !self.complete {
            return Err(Error::Precondition("fiber cone needs the complete Rees ideal".into()));
        }
        let n = self.base.ring().nvars();
        let ring = fiber_ring(&self.ring, n, &self.degrees)?;
        let map: Vec<Polynomial<F>> = (0..n)
            .map(|_| Polynomial::zero(&ring))
            .chain((0..self.degrees.len()).map(|j| Polynomial::var(&ring, j)))
            .collect();
        let gens = self.q.gens().iter().map(|g| g.substitute(&ring, &map)).collect::<Result<_>>()?;
        Ideal::new(&ring, gens)
    }
}

fn fiber_ring<F: Field>(rt: &Ring<F>, nbase: usize, degrees: &[u32]) -> Result<Ring<F>> {
    let names = rt.names()[nbase..].to_vec();
    let ring = PolyRing::new(rt.field().clone(), names, Grading::Weights(degrees.to_vec()), MonomialOrder::DegRevLex)?;
    Ok(Arc::new(ring))
}

/// Analytic spread as the dimension of the fiber cone.
pub fn analytic_spread<F: Field>(p: &ReesPresentation<F>) -> Result<usize> {
    let l = p.fiber_ideal()?.dim_quotient()?;
    let n = p.base.ring().nvars() as i64;
    let g = p.base.height()?;
    if l < g || l > n {
        return Err(Error::Invariant(format!("analytic spread {l} outside [height {g}, dim R {n}]")));
    }
    Ok(l as usize)
}

/// Analytic spread of an equigenerated ideal as `dim k[a_1..a_n]`, from the
/// kernel of `k[T] -> R`.
pub fn analytic_spread_equigenerated<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    let Some(d) = ideal.equigenerated_degree() else {
        return Err(Error::Unsupported("kernel route needs an equigenerated ideal".into()));
    };
    let base = ideal.trimmed();
    let br = base.ring().clone();
    let n = br.nvars();
    let mu = base.mu();
    let tp = fresh_prefix(&br, "T");
    let mut names: Vec<String> = br.names().to_vec();
    names.extend((1..=mu).map(|j| format!("{tp}{j}")));
    let mut weights: Vec<u32> = br.weights().to_vec();
    weights.extend(std::iter::repeat_n(d, mu));
    let ring: Ring<F> = Arc::new(PolyRing::new(
        br.field().clone(),
        names,
        Grading::Weights(weights),
        MonomialOrder::elimination(n, n + mu),
    )?);
    let map: Vec<usize> = (0..n).collect();
    let gens: Vec<Polynomial<F>> = base
        .gens()
        .iter()
        .enumerate()
        .map(|(j, a)| &Polynomial::var(&ring, n + j) - &a.rename_into(&ring, &map))
        .collect();
    let elim = eliminate(&ring, &gens, n, &GbOptions::default())?;
    let fr: Ring<F> = Arc::new(PolyRing::new(
        br.field().clone(),
        ring.names()[n..].to_vec(),
        Grading::Standard,
        MonomialOrder::DegRevLex,
    )?);
    let back: Vec<usize> = std::iter::repeat_n(0, n).chain(0..mu).collect();
    let ker: Vec<Polynomial<F>> = elim.generators.iter().map(|p| p.rename_into(&fr, &back)).collect();
    Ok(Ideal::new(&fr, ker)?.dim_quotient()? as usize)
}

/// Rank of the Jacobian of the minimal generators at a random point: a lower
/// bound for the analytic spread of an equigenerated ideal, generically equal.
pub fn jacobian_rank<F: Field>(ideal: &Ideal<F>, seed: u64) -> Result<usize> {
    let ring = ideal.ring();
    let f = ring.field();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point: Vec<F::Elem> = (0..n).map(|_| f.random(&mut rng)).collect();
    let gens = ideal.mingens();
    let mut jac = Matrix::zeros(f, gens.len(), n);
    for (r, g) in gens.iter().enumerate() {
        for v in 0..n {
            let mut acc = f.zero();
            for (m, c) in g.terms() {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let mut term = f.mul(c, &f.from_i64(e as i64));
                for (u, x) in point.iter().enumerate() {
                    let k = m.exp(u) - if u == v { 1 } else { 0 };
                    for _ in 0..k {
                        term = f.mul(&term, x);
                    }
                }
                acc = f.add(&acc, &term);
            }
            jac.set(r, v, acc);
        }
    }
    Ok(jac.rank(f))
}

/// A minimal reduction `J` with `I^{r+1} = J I^r`.
#[derive(Clone, Debug)]
pub struct ReductionCertificate<F: Field> {
    pub j: Ideal<F>,
    pub reduction_number: u32,
    pub seed: u64,
    pub attempts: usize,
}

/// `ell` random combinations of the minimal generators, checked to be a
/// reduction with reduction number at most `r_max`.
pub fn minimal_reduction<F: Field>(
    ideal: &Ideal<F>,
    ell: usize,
    seed: u64,
    r_max: u32,
    max_attempts: usize,
) -> Result<ReductionCertificate<F>> {
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::Unsupported("minimal reductions need an equigenerated ideal".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = ideal.trimmed();
    // powers[r] = I^r, starting with I^1
    let mut powers: Vec<Ideal<F>> = vec![base.clone()];
    for attempt in 1..=max_attempts {
        let j = if ell == base.mu() {
            base.clone()
        } else {
            Ideal::new(ideal.ring(), base.random_combinations(ell, &mut rng)?)?
        };
        if j.mu() != ell {
            continue;
        }
        // r = 0: I = J
        if base.is_subset_of(&j)? {
            return Ok(ReductionCertificate { j, reduction_number: 0, seed, attempts: attempt });
        }
        for r in 1..=r_max {
            while powers.len() <= r as usize {
                let next = powers.last().unwrap().product(&base)?;
                powers.push(next);
            }
            let jr = j.product(&powers[r as usize - 1])?;
            if powers[r as usize].is_subset_of(&jr)? {
                return Ok(ReductionCertificate { j, reduction_number: r, seed, attempts: attempt });
            }
        }
    }
    Err(Error::ResourceCap(format!("no reduction with {ell} generators and r <= {r_max} in {max_attempts} attempts")))
}
