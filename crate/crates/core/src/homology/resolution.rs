use std::collections::BTreeMap;

use serde::Serialize;

use super::hilbert::HilbertSeries;
use super::module::{apply_map, trim, FpModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{tracked_gb, GbOptions, ModuleCtx, Vector};
use crate::ring::Ring;

/// A graded free resolution `F_0 <- F_1 <- ... <- F_k`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub ring: Ring<F>,
    /// Twists of each free module.
    pub twists: Vec<Vec<i64>>,
    /// `maps[i]` holds the columns of `F_{i+1} -> F_i`.
    pub maps: Vec<Vec<Vector<F>>>,
    pub minimal: bool,
    /// False when the length cap stopped the computation with a nonzero kernel left.
    pub complete: bool,
}

/// Graded Betti numbers: `rows[i][j - min_degree] = beta_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub min_degree: i64,
    pub rows: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn totals(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.rows.get(i).and_then(|r| r.get((j - self.min_degree) as usize)).copied().unwrap_or(0)
    }

    /// Sparse view: homological degree -> internal degree -> rank.
    pub fn entries(&self) -> BTreeMap<usize, BTreeMap<i64, u64>> {
        let mut out = BTreeMap::new();
        for (i, r) in self.rows.iter().enumerate() {
            let row: BTreeMap<i64, u64> =
                r.iter().enumerate().filter(|(_, &b)| b > 0).map(|(k, &b)| (self.min_degree + k as i64, b)).collect();
            out.insert(i, row);
        }
        out
    }
}

impl<F: Field> Resolution<F> {
    /// Projective dimension (`None` for a partial resolution or the zero module).
    pub fn pd(&self) -> Option<usize> {
        if !self.complete || self.twists.first().is_none_or(|t| t.is_empty()) {
            return None;
        }
        Some(self.maps.len())
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> BettiTable {
        let all: Vec<i64> = self.twists.iter().flatten().copied().collect();
        let lo = all.iter().copied().min().unwrap_or(0);
        let hi = all.iter().copied().max().unwrap_or(0);
        let rows = self
            .twists
            .iter()
            .filter(|t| !t.is_empty())
            .map(|t| {
                let mut r = vec![0u64; (hi - lo + 1) as usize];
                for &d in t {
                    r[(d - lo) as usize] += 1;
                }
                r
            })
            .collect();
        BettiTable { min_degree: lo, rows }
    }

    /// Alternating sum of the free modules.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let w = self.ring.weights().to_vec();
        let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
        for (i, t) in self.twists.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &d in t {
                *terms.entry(d).or_default() += sign;
            }
        }
        let Some((&lo, _)) = terms.iter().next() else { return HilbertSeries::zero(w) };
        let hi = *terms.keys().last().unwrap();
        let mut v = vec![0i64; (hi - lo + 1) as usize];
        for (d, c) in terms {
            v[(d - lo) as usize] = c;
        }
        HilbertSeries::new(lo, v, w)
    }

    /// Whether each composite `F_{i+2} -> F_i` vanishes.
    pub fn is_complex(&self) -> bool {
        (1..self.maps.len()).all(|i| {
            let target = ModuleCtx::free(&self.ring, self.twists[i - 1].clone());
            self.maps[i].iter().all(|c| apply_map(&target, &self.maps[i - 1], c).is_empty())
        })
    }

    /// Whether any differential has a unit entry.
    pub fn has_unit_entries(&self) -> bool {
        self.maps.iter().flatten().any(|c| c.iter().any(|(t, _)| t.mono.is_one()))
    }
}

/// Minimal graded free resolution of a module, stopping after `length_cap` maps.
pub fn minimal_resolution<F: Field>(m: &FpModule<F>, length_cap: Option<usize>) -> Result<Resolution<F>> {
    let p = m.minimal_presentation()?;
    let ring = p.ring().clone();
    let n = ring.nvars();
    let mut twists = vec![p.twists().to_vec()];
    let mut maps: Vec<Vec<Vector<F>>> = Vec::new();
    let mut complete = true;
    let mut cur = p.relations().to_vec();
    while !cur.is_empty() {
        if length_cap.is_some_and(|c| maps.len() >= c) {
            complete = false;
            break;
        }
        let target = ModuleCtx::free(&ring, twists.last().unwrap().clone());
        let degs: Vec<i64> = cur.iter().map(|c| target.degree(&c[0].0)).collect();
        let tr = tracked_gb(&target, &cur, &degs, &GbOptions::default())?;
        let next = trim(tr.source(), &tr.syzygies());
        maps.push(cur);
        twists.push(degs);
        cur = next;
        if maps.len() > n {
            return Err(Error::Invariant(format!("resolution longer than the {n} variables")));
        }
    }
    Ok(Resolution { ring, twists, maps, minimal: true, complete })
}
