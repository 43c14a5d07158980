//! Builders for the reference examples and the small cross-checking corpus.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{check_gs, matrix_product, minors, pfaffians, GsOptions, GsVerdict, Ideal, PolyMatrix};
use crate::order::MonomialOrder;
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::{mk_ring, Grading, Ring};

/// Seed of the pinned generic Pfaffian instance.
pub const PFAFFIAN4_SEED: u64 = 7;

fn std_ring<F: Field>(field: F, names: &[String]) -> Result<Ring<F>> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    mk_ring(field, &refs, Grading::Standard, MonomialOrder::DegRevLex)
}

/// The circulant `2 x 4` matrix `[[x1,x2,x3,x4],[x2,x3,x4,x1]]`.
pub fn circulant_matrix<F: Field>(ring: &Ring<F>) -> PolyMatrix<F> {
    let x = |i: usize| Polynomial::var(ring, i % 4);
    vec![(0..4).map(x).collect(), (1..5).map(x).collect()]
}

/// Maximal minors of the circulant matrix in `k[x1..x4]`.
pub fn example_25a<F: Field>(field: F) -> Result<Ideal<F>> {
    let names: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    let ring = std_ring(field, &names)?;
    Ideal::new(&ring, minors(&ring, &circulant_matrix(&ring), 2)?)
}

/// Generic alternating matrix with entries `p_ij` (`i < j`), indices from 1.
pub fn generic_alternating<F: Field>(ring: &Ring<F>, prefix: &str, n: usize) -> Result<PolyMatrix<F>> {
    let mut m = vec![vec![Polynomial::zero(ring); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let name = format!("{prefix}{}{}", i + 1, j + 1);
            let v = ring.var_index(&name).ok_or(Error::UnknownVariable(name))?;
            m[i][j] = Polynomial::var(ring, v);
            m[j][i] = -&m[i][j];
        }
    }
    Ok(m)
}

/// Ring of the generic `5 x 5` alternating matrix `p` and column `y`.
pub fn example_25b_ring<F: Field>(field: F) -> Result<Ring<F>> {
    let mut names = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            names.push(format!("p{i}{j}"));
        }
    }
    names.extend((1..=5).map(|i| format!("y{i}")));
    std_ring(field, &names)
}

/// The 4-Pfaffians of a generic `5 x 5` alternating matrix together with the
/// entries of its product with a generic column, in 15 variables.
pub fn example_25b<F: Field>(field: F) -> Result<Ideal<F>> {
    let ring = example_25b_ring(field)?;
    let phi = generic_alternating(&ring, "p", 5)?;
    let y: PolyMatrix<F> =
        (1..=5).map(|i| vec![Polynomial::var(&ring, ring.var_index(&format!("y{i}")).unwrap())]).collect();
    let mut gens = pfaffians(&ring, &phi, 4)?;
    gens.extend(matrix_product(&ring, &phi, &y)?.into_iter().map(|mut r| r.remove(0)));
    Ideal::new(&ring, gens)
}

/// Alternating `5 x 5` matrix of random linear forms in `x1..x4`.
pub fn random_alternating_linear<F: Field>(ring: &Ring<F>, rng: &mut ChaCha8Rng) -> PolyMatrix<F> {
    let f = ring.field();
    let n = ring.nvars();
    let mut m = vec![vec![Polynomial::zero(ring); 5]; 5];
    for i in 0..5 {
        for j in i + 1..5 {
            let terms = (0..n).map(|v| (ring.var_mono(v), f.random(rng))).collect();
            m[i][j] = Polynomial::from_terms(ring, terms);
            m[j][i] = -&m[i][j];
        }
    }
    m
}

/// Submaximal Pfaffians of a random linear alternating `5 x 5` matrix in four
/// variables, redrawn until the ideal has height 3 and satisfies `G_4`.
/// Returns the ideal, its matrix and the number of draws.
pub fn generic_pfaffian_gorenstein<F: Field>(field: F, seed: u64) -> Result<(Ideal<F>, PolyMatrix<F>, usize)> {
    let names: Vec<String> = (1..=4).map(|i| format!("x{i}")).collect();
    let ring = std_ring(field, &names)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=20 {
        let m = random_alternating_linear(&ring, &mut rng);
        let i = Ideal::new(&ring, pfaffians(&ring, &m, 4)?)?;
        if i.mu() != 5 || i.height()? != 3 {
            continue;
        }
        if check_gs(&i, Some(4), &GsOptions { seed, ..GsOptions::default() })?.verdict == GsVerdict::Pass {
            return Ok((i, m, attempt));
        }
    }
    Err(Error::ResourceCap("no generic Pfaffian ideal found in 20 draws".into()))
}

/// A named member of the cross-checking corpus.
pub struct CorpusEntry {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub gens: &'static [&'static str],
}

/// Small ideals spanning monomial, determinantal, Pfaffian and complete
/// intersection cases.
pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "ci_xy", vars: &["x", "y", "z"], gens: &["x", "y"] },
    CorpusEntry { name: "ci_quadrics", vars: &["x", "y", "z"], gens: &["x^2", "y^2", "z^2"] },
    CorpusEntry { name: "maximal3", vars: &["x", "y", "z"], gens: &["x", "y", "z"] },
    CorpusEntry { name: "m_squared2", vars: &["x", "y"], gens: &["x^2", "x*y", "y^2"] },
    CorpusEntry { name: "embedded_point", vars: &["x", "y"], gens: &["x^2", "x*y"] },
    CorpusEntry { name: "three_lines", vars: &["x", "y", "z"], gens: &["x*y", "x*z", "y*z"] },
    CorpusEntry { name: "two_planes", vars: &["x", "y", "z", "w"], gens: &["x*z", "x*w", "y*z", "y*w"] },
    CorpusEntry { name: "twisted_cubic", vars: &["x", "y", "z", "w"], gens: &["x*z - y^2", "x*w - y*z", "y*w - z^2"] },
    CorpusEntry {
        name: "circulant_minors",
        vars: &["x1", "x2", "x3", "x4"],
        gens: &["x1*x3 - x2^2", "x1*x4 - x2*x3", "x1^2 - x2*x4", "x2*x4 - x3^2", "x2*x1 - x4*x3", "x3*x1 - x4^2"],
    },
    CorpusEntry { name: "monomial_mixed", vars: &["x", "y", "z"], gens: &["x^3", "x^2*y", "x*y*z", "y^2*z^2"] },
    CorpusEntry {
        name: "pfaffians_linear4",
        vars: &["x", "y", "z", "w"],
        gens: &["w*x - w*y + x^2 + y*z + z^2", "w^2 + w*x + y^2", "w^2 + x*y", "w*z", "w*x - w*y + x^2 + z^2"],
    },
    CorpusEntry {
        name: "ci_mixed_degrees",
        vars: &["x", "y", "z", "w"],
        gens: &["x*y - z*w", "x^3 + y^3 + z^3 + w^3"],
    },
];

/// Parse a corpus entry over the given field.
pub fn corpus_ideal<F: Field>(field: F, entry: &CorpusEntry) -> Result<Ideal<F>> {
    let names: Vec<String> = entry.vars.iter().map(|s| s.to_string()).collect();
    let ring = std_ring(field, &names)?;
    let gens = entry.gens.iter().map(|g| parse_poly(&ring, g)).collect::<Result<_>>()?;
    Ideal::new(&ring, gens)
}
