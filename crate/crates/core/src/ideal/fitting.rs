use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::determinantal::{minors, PolyMatrix};
use super::Ideal;
use crate::error::Result;
use crate::field::Field;
use crate::groebner::poly_syzygies;
use crate::linalg::{poly_det, Matrix};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{mk_ring, Grading, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GsVerdict {
    Pass,
    Fail,
    /// Every checked index passed, but some were capped or left uncertified.
    Partial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FittingStatus {
    Certified,
    Failed,
    /// The lazy certifier found no witness and the full minor ideal is too large.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FittingMethod {
    /// Height of the full ideal of minors.
    Exact,
    /// Minors of random compressions restricted to a random linear subspace of
    /// dimension `i + 1`; an Artinian image certifies the bound.
    LinearSection,
    /// The required height exceeds the number of variables.
    DimensionBound,
}

/// One row of the Fitting profile.
#[derive(Clone, Debug, Serialize)]
pub struct FittingEntry {
    pub i: usize,
    pub minor_size: usize,
    pub required: i64,
    /// Exact height when the full minor ideal was computed.
    pub height: Option<i64>,
    pub certified_lower: i64,
    pub status: FittingStatus,
    pub method: FittingMethod,
}

#[derive(Clone, Debug, Serialize)]
pub struct GsReport {
    /// `None` stands for `G_∞`.
    pub s: Option<usize>,
    pub mu: usize,
    pub verdict: GsVerdict,
    /// Indices beyond `index_cap` that were not examined.
    pub skipped: Vec<usize>,
    pub profile: Vec<FittingEntry>,
}

/// Tuning knobs for [`check_gs`].
#[derive(Clone, Debug)]
pub struct GsOptions {
    pub index_cap: Option<usize>,
    /// Largest number of minors for which the full Fitting ideal is built.
    pub exact_minor_cap: usize,
    /// Random linear sections tried before giving up on an index.
    pub section_attempts: usize,
    pub seed: u64,
}

impl Default for GsOptions {
    fn default() -> Self {
        GsOptions { index_cap: None, exact_minor_cap: 2000, section_attempts: 4, seed: 0 }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
}

/// Presentation matrix of the minimal generators: rows are generators, columns
/// minimal syzygies.
pub fn presentation_matrix<F: Field>(ideal: &Ideal<F>) -> Result<PolyMatrix<F>> {
    let syz = poly_syzygies(ideal.ring(), ideal.mingens())?;
    Ok((0..ideal.mu()).map(|r| syz.iter().map(|s| s[r].clone()).collect()).collect())
}

fn homogeneous_parts<F: Field>(p: Polynomial<F>) -> Vec<Polynomial<F>> {
    let ring = p.ring().clone();
    let mut parts: Vec<(u32, Vec<_>)> = Vec::new();
    for (m, c) in p.into_terms() {
        let d = m.degree();
        match parts.iter_mut().find(|(e, _)| *e == d) {
            Some((_, v)) => v.push((m, c)),
            None => parts.push((d, vec![(m, c)])),
        }
    }
    parts.into_iter().map(|(_, t)| Polynomial::from_terms(&ring, t)).collect()
}

/// Sub-matrices on the columns of degree at most `e`, one per occurring `e`.
fn degree_prefixes<F: Field>(phi: &PolyMatrix<F>) -> Vec<PolyMatrix<F>> {
    let cols = phi.first().map_or(0, |r| r.len());
    let col_deg: Vec<u32> =
        (0..cols).map(|c| phi.iter().filter_map(|row| row[c].degree()).max().unwrap_or(0)).collect();
    let mut degs = col_deg.clone();
    degs.sort_unstable();
    degs.dedup();
    degs.iter()
        .map(|&e| {
            let keep: Vec<usize> = (0..cols).filter(|&c| col_deg[c] <= e).collect();
            phi.iter().map(|row| keep.iter().map(|&c| row[c].clone()).collect()).collect()
        })
        .collect()
}

/// Try to certify `ht I_k(phi) >= h` via one random `h`-dimensional section.
fn certify_by_section<F: Field>(
    ring: &Ring<F>,
    phi: &PolyMatrix<F>,
    k: usize,
    h: usize,
    rng: &mut ChaCha8Rng,
) -> Result<bool> {
    let f = ring.field();
    let n = ring.nvars();
    let names: Vec<String> = (1..=h).map(|i| format!("y{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let sec = mk_ring(f.clone(), &refs, Grading::Standard, MonomialOrder::DegRevLex)?;
    let a = Matrix::random(f, n, h, rng);
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| Polynomial::from_terms(&sec, (0..h).map(|j| (sec.var_mono(j), a.get(i, j).clone())).collect()))
        .collect();
    let restricted: PolyMatrix<F> = phi
        .iter()
        .map(|row| row.iter().map(|p| p.substitute(&sec, &images)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let rows = restricted.len();
    let cols = restricted.first().map_or(0, |r| r.len());
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for round in 0..3 {
        for _ in 0..h + if round == 0 { 1 } else { 0 } {
            let p = Matrix::random(f, k, rows, rng);
            let q = Matrix::random(f, cols, k, rng);
            let pm: PolyMatrix<F> = (0..k)
                .map(|r| {
                    (0..cols)
                        .map(|c| {
                            (0..rows)
                                .fold(Polynomial::zero(&sec), |acc, j| &acc + &restricted[j][c].scalar_mul(p.get(r, j)))
                        })
                        .collect()
                })
                .collect();
            let compressed: PolyMatrix<F> = (0..k)
                .map(|r| {
                    (0..k)
                        .map(|c| {
                            (0..cols).fold(Polynomial::zero(&sec), |acc, j| &acc + &pm[r][j].scalar_mul(q.get(j, c)))
                        })
                        .collect()
                })
                .collect();
            gens.extend(homogeneous_parts(poly_det(&sec, &compressed)));
        }
        let j = Ideal::new(&sec, gens.clone())?;
        if !j.is_zero() && j.dim_quotient()? <= 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Check `G_s` (or `G_∞` when `s` is `None`) through the heights of the Fitting
/// ideals `Fitt_i = I_{mu - i}(phi)`, `1 <= i <= s - 1`.
pub fn check_gs<F: Field>(ideal: &Ideal<F>, s: Option<usize>, opts: &GsOptions) -> Result<GsReport> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mu = ideal.mu();
    // Fitt_i is the unit ideal once i >= mu.
    let top = match s {
        Some(s) => s.saturating_sub(1).min(mu.saturating_sub(1)),
        None => mu.saturating_sub(1),
    };
    let last = opts.index_cap.map_or(top, |c| c.min(top));
    let skipped: Vec<usize> = (last + 1..=top).collect();
    let phi = if last >= 1 { presentation_matrix(ideal)? } else { Vec::new() };
    let cols = phi.first().map_or(0, |r| r.len());
    let column_prefixes = degree_prefixes(&phi);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut profile = Vec::new();
    for i in 1..=last {
        let k = mu - i;
        let required = i as i64 + 1;
        let entry = |height, lower, status, method| FittingEntry {
            i,
            minor_size: k,
            required,
            height,
            certified_lower: lower,
            status,
            method,
        };
        if i + 1 > n {
            profile.push(entry(None, 0, FittingStatus::Failed, FittingMethod::DimensionBound));
            continue;
        }
        if binomial(mu, k) * binomial(cols, k) <= opts.exact_minor_cap as u128 {
            let fitt = Ideal::new(ring, minors(ring, &phi, k)?)?;
            let h = if fitt.is_zero() { 0 } else { fitt.height()? };
            let status = if h >= required { FittingStatus::Certified } else { FittingStatus::Failed };
            profile.push(entry(Some(h), h, status, FittingMethod::Exact));
            continue;
        }
        let mut certified = false;
        if ring.is_standard_graded() {
            // Columns of the lowest degrees first: their minors are homogeneous
            // and already lie in the Fitting ideal.
            // Proper column prefixes get one attempt each, the full matrix the rest.
            let usable: Vec<&PolyMatrix<F>> =
                column_prefixes.iter().filter(|sub| sub.first().map_or(0, |r| r.len()) >= k).collect();
            'outer: for (idx, sub) in usable.iter().enumerate() {
                let tries = if idx + 1 == usable.len() { opts.section_attempts } else { 1 };
                for _ in 0..tries {
                    if certify_by_section(ring, sub, k, i + 1, &mut rng)? {
                        certified = true;
                        break 'outer;
                    }
                }
            }
        }
        profile.push(if certified {
            entry(None, required, FittingStatus::Certified, FittingMethod::LinearSection)
        } else {
            entry(None, 0, FittingStatus::Unknown, FittingMethod::LinearSection)
        });
    }
    let verdict = if profile.iter().any(|e| e.status == FittingStatus::Failed) {
        GsVerdict::Fail
    } else if !skipped.is_empty() || profile.iter().any(|e| e.status == FittingStatus::Unknown) {
        GsVerdict::Partial
    } else {
        GsVerdict::Pass
    };
    Ok(GsReport { s, mu, verdict, skipped, profile })
}
