//! Homogeneous ideals with cached Gröbner data: arithmetic, colons,
//! intersections, minimal generators, height, Fitting ideals and `G_s`.

mod determinantal;
mod fitting;

pub use determinantal::{matrix_product, minors, pfaffian, pfaffians, PolyMatrix};
pub use fitting::{
    check_gs, presentation_matrix, FittingEntry, FittingMethod, FittingStatus, GsOptions, GsReport, GsVerdict,
};

use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{eliminate, groebner_basis, poly_syzygies, GbOptions, GroebnerBasis};
use crate::homology::{combinatorial_dim, monomial_numerator, FpModule, HilbertSeries};
use crate::order::{InnerOrder, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Grading, PolyRing, Ring};

/// A homogeneous ideal given by generators, with lazily computed invariants.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
    mingens: OnceLock<Vec<Polynomial<F>>>,
    hilbert: OnceLock<HilbertSeries>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
            mingens: OnceLock::new(),
            hilbert: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ring's order (cached).
    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| groebner_basis(&self.ring, &self.gens).expect("generators share the ring"))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> Result<bool> {
        other.gb().contains_all(&self.gens)
    }

    /// Equality as ideals (reduced bases coincide).
    pub fn same_as(&self, other: &Ideal<F>) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.gb().generators() == other.gb().generators())
    }

    /// A minimal homogeneous generating set, taken from the given generators.
    pub fn mingens(&self) -> &[Polynomial<F>] {
        self.mingens
            .get_or_init(|| self.gb().minimal_generator_indices().iter().map(|&i| self.gens[i].clone()).collect())
    }

    pub fn mu(&self) -> usize {
        self.mingens().len()
    }

    /// Sorted degrees of the minimal generators.
    pub fn mingen_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.mingens().iter().map(|g| g.degree().unwrap()).collect();
        d.sort_unstable();
        d
    }

    /// Common degree of the minimal generators, if there is one.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.mingen_degrees();
        match d.first() {
            Some(&a) if d.iter().all(|&b| b == a) => Some(a),
            _ => None,
        }
    }

    /// Same ideal with the minimal generators as its generator list.
    pub fn trimmed(&self) -> Ideal<F> {
        let out = Ideal::new(&self.ring, self.mingens().to_vec()).expect("homogeneous");
        if let Some(gb) = self.gb.get() {
            let _ = out.gb.set(gb.clone());
        }
        let _ = out.mingens.set(out.gens.clone());
        out
    }

    /// Hilbert series of `R/I`.
    pub fn quotient_hilbert(&self) -> &HilbertSeries {
        self.hilbert.get_or_init(|| {
            let w = self.ring.weights().to_vec();
            HilbertSeries::new(0, monomial_numerator(&self.gb().leading_monomials(), &w), w)
        })
    }

    /// `dim R/I`, computed from the Hilbert series and cross-checked against the
    /// initial ideal; `-1` for the unit ideal.
    pub fn dim_quotient(&self) -> Result<i64> {
        let d = self.quotient_hilbert().dim();
        let c = combinatorial_dim(&self.gb().leading_monomials(), self.ring.nvars());
        if d != c {
            return Err(Error::Invariant(format!("dimension routes disagree: {d} vs {c}")));
        }
        Ok(d)
    }

    /// Height `n - dim R/I` of a proper nonzero ideal.
    pub fn height(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::Precondition("height of the zero ideal".into()));
        }
        if self.is_unit() {
            return Err(Error::Precondition("height of the unit ideal".into()));
        }
        Ok(self.ring.nvars() as i64 - self.dim_quotient()?)
    }

    /// `R/I` as a presented module.
    pub fn quotient_module(&self) -> FpModule<F> {
        FpModule::quotient_ring(&self.ring, self.mingens()).expect("homogeneous")
    }

    fn check_same(&self, other: &Ideal<F>) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same(other)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// Product, generated by the products of minimal generators.
    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same(other)?;
        let mut g = Vec::with_capacity(self.mu() * other.mu());
        for a in self.mingens() {
            for b in other.mingens() {
                g.push(a * b);
            }
        }
        Ok(Ideal::new(&self.ring, g)?.trimmed())
    }

    /// `I^j` by repeated multiplication, trimming at every step.
    pub fn power(&self, j: u32) -> Result<Ideal<F>> {
        if j == 0 {
            return Err(Error::Precondition("exponent must be at least 1".into()));
        }
        let mut acc = self.trimmed();
        for _ in 1..j {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersection(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ideal::new(&self.ring, Vec::new());
        }
        let (aux, embed) = aux_ring(&self.ring)?;
        let t = Polynomial::var(&aux, 0);
        let one_minus_t = &Polynomial::one(&aux) - &t;
        let mut gens = Vec::new();
        for a in self.mingens() {
            gens.push(&t * &a.rename_into(&aux, &embed));
        }
        for b in other.mingens() {
            gens.push(&one_minus_t * &b.rename_into(&aux, &embed));
        }
        let elim = eliminate(&aux, &gens, 1, &GbOptions::default())?;
        let mut back = vec![0usize; aux.nvars()];
        for (i, &j) in embed.iter().enumerate() {
            back[j] = i;
        }
        let res: Vec<Polynomial<F>> = elim.generators.iter().map(|p| p.rename_into(&self.ring, &back)).collect();
        Ok(Ideal::new(&self.ring, res)?.trimmed())
    }

    /// `I ∩ J` from the syzygies of `(f_1, .., f_r, -g_1, .., -g_s)`.
    pub fn intersection_by_syzygies(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same(other)?;
        let a = self.mingens();
        let mut row: Vec<Polynomial<F>> = a.to_vec();
        row.extend(other.mingens().iter().map(|g| -g));
        let syz = poly_syzygies(&self.ring, &row)?;
        let gens = syz
            .iter()
            .map(|s| a.iter().zip(s).fold(Polynomial::zero(&self.ring), |acc, (f, c)| &acc + &(f * c)))
            .collect();
        Ok(Ideal::new(&self.ring, gens)?.trimmed())
    }

    /// `I : f`, the first coordinates of the syzygies of `(f, f_1, ..)`.
    pub fn colon_element(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous(f.to_string()));
        }
        let mut row = vec![f.clone()];
        row.extend(self.mingens().iter().cloned());
        let syz = poly_syzygies(&self.ring, &row)?;
        let gens = syz.into_iter().map(|s| s.into_iter().next().unwrap()).collect();
        Ok(Ideal::new(&self.ring, gens)?.trimmed())
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn colon(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_same(other)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in other.mingens() {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]),
        }
    }

    /// `k` random linear combinations of the minimal generators of degree `deg`.
    pub fn random_combinations<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> Result<Vec<Polynomial<F>>> {
        let Some(_) = self.equigenerated_degree() else {
            return Err(Error::Unsupported("general combinations need an equigenerated ideal".into()));
        };
        let f = self.ring.field();
        Ok((0..k)
            .map(|_| {
                self.mingens().iter().fold(Polynomial::zero(&self.ring), |acc, g| &acc + &g.scalar_mul(&f.random(rng)))
            })
            .collect())
    }
}

/// The ring `k[t, x]` with `t` eliminated first, and the index map `x_i -> x_i`.
pub(crate) fn aux_ring<F: Field>(ring: &Ring<F>) -> Result<(Ring<F>, Vec<usize>)> {
    let n = ring.nvars();
    let mut name = "t".to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    let mut names = vec![name];
    names.extend(ring.names().iter().cloned());
    let k = ring.grading_rank();
    let mut t_deg = vec![0u32; k];
    t_deg[0] = 1;
    let mut grading = vec![t_deg];
    grading.extend(ring.grading().iter().cloned());
    let mut blocks = vec![(1, InnerOrder::DegRevLex)];
    match ring.order() {
        MonomialOrder::DegRevLex => blocks.push((n, InnerOrder::DegRevLex)),
        MonomialOrder::Lex => blocks.push((n, InnerOrder::Lex)),
        MonomialOrder::Block(b) => blocks.extend(b.iter().cloned()),
    }
    let aux = PolyRing::new(ring.field().clone(), names, Grading::Multi(grading), MonomialOrder::Block(blocks))?;
    Ok((std::sync::Arc::new(aux), (1..=n).collect()))
}
