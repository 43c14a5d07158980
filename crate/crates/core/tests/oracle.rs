//! Cross-checks against frozen values from the independent linear-algebra
//! oracle in `oracle/oracle.py` (fixtures under `tests/fixtures`).

use serde_json::Value;

use scmlab_core::blowup::{analytic_spread, analytic_spread_equigenerated, rees_ideal, syzygetic_range, ReesOptions};
use scmlab_core::corpus::{corpus_ideal, generic_pfaffian_gorenstein, CORPUS, PFAFFIAN4_SEED};
use scmlab_core::homology::{kernel_of_map, minimal_resolution, HilbertSeries};
use scmlab_core::ideal::{check_gs, minors, GsOptions, GsVerdict, Ideal};
use scmlab_core::koszul::KoszulComplex;
use scmlab_core::parse::parse_poly;
use scmlab_core::{Field, Zp};

fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

/// Hilbert function in degrees `0..len`.
fn hf(hs: &HilbertSeries, len: usize) -> Vec<i64> {
    if hs.is_zero() {
        return vec![0; len];
    }
    let shift = hs.shift.max(0) as usize;
    let mut out = vec![0; shift.min(len)];
    out.extend(hs.expand(len.saturating_sub(shift)));
    out
}

fn parse_ideal<F: Field>(ideal: &Ideal<F>, gens: &Value) -> Ideal<F> {
    let ring = ideal.ring();
    let gens = gens.as_array().unwrap().iter().map(|g| parse_poly(ring, g.as_str().unwrap()).unwrap()).collect();
    Ideal::new(ring, gens).unwrap()
}

/// Compare every numerical invariant the oracle records for one ideal.
fn check_summary(ideal: &Ideal<Zp>, want: &Value) {
    let name = want["name"].as_str().unwrap();
    let n = ideal.ring().nvars() as i64;
    let res = minimal_resolution(&ideal.quotient_module(), None).unwrap();
    let mut betti: Vec<Vec<i64>> = Vec::new();
    for (i, row) in res.betti().entries() {
        for (j, b) in row {
            betti.push(vec![i as i64, j, b as i64]);
        }
    }
    betti.sort();
    let want_betti: Vec<Vec<i64>> = want["betti"].as_array().unwrap().iter().map(ints).collect();
    assert_eq!(betti, want_betti, "{name}: Betti table");
    assert_eq!(ideal.mu() as i64, want["mu"].as_i64().unwrap(), "{name}: mu");
    assert_eq!(ideal.dim_quotient().unwrap(), want["dim"].as_i64().unwrap(), "{name}: dim");
    assert_eq!(n - res.pd().unwrap() as i64, want["depth"].as_i64().unwrap(), "{name}: depth");
    assert_eq!(ideal.height().unwrap(), want["height"].as_i64().unwrap(), "{name}: height");
    let hf_want = ints(&want["hilbert_function"]);
    assert_eq!(hf(ideal.quotient_hilbert(), hf_want.len()), hf_want, "{name}: Hilbert function");
    let ell = match ideal.equigenerated_degree() {
        Some(_) => analytic_spread_equigenerated(ideal).unwrap(),
        None => analytic_spread(&rees_ideal(ideal, &ReesOptions::default()).unwrap()).unwrap(),
    };
    assert_eq!(ell as i64, want["analytic_spread"].as_i64().unwrap(), "{name}: analytic spread");
}

#[test]
fn corpus_matches_oracle() {
    let oracle = fixture("oracle.json");
    let entries = oracle["corpus"].as_array().unwrap();
    assert!(entries.len() >= 10);
    assert_eq!(entries.len(), CORPUS.len());
    for (entry, want) in CORPUS.iter().zip(entries) {
        assert_eq!(entry.name, want["name"].as_str().unwrap());
        let ideal = corpus_ideal(Zp::default(), entry).unwrap();
        assert!(ideal.same_as(&parse_ideal(&ideal, &want["generators"])).unwrap(), "{}: generators", entry.name);
        check_summary(&ideal, want);
    }
}

#[test]
fn koszul_homology_hilbert_functions() {
    let oracle = fixture("oracle.json");
    for want in oracle["koszul_hilbert"].as_array().unwrap() {
        let name = want["name"].as_str().unwrap();
        let entry = CORPUS.iter().find(|e| e.name == name).unwrap();
        let ideal = corpus_ideal(Zp::default(), entry).unwrap();
        let gens = parse_ideal(&ideal, &want["generators"]);
        let k = KoszulComplex::new(ideal.ring(), gens.gens()).unwrap();
        assert!(k.is_complex());
        for (i, row) in want["hf"].as_array().unwrap().iter().enumerate() {
            let row = ints(row);
            let h = k.homology(i).unwrap();
            assert_eq!(hf(&h.hilbert_series(), row.len()), row, "{name}: H_{i}");
        }
    }
}

#[test]
fn koszul_cycles_hilbert_function() {
    let oracle = fixture("oracle.json");
    for want in oracle["kernels"].as_array().unwrap() {
        let name = want["name"].as_str().unwrap();
        let entry = CORPUS.iter().find(|e| e.name == name).unwrap();
        let ideal = corpus_ideal(Zp::default(), entry).unwrap();
        let gens = parse_ideal(&ideal, &want["generators"]);
        let i = want["i"].as_u64().unwrap() as usize;
        let k = KoszulComplex::new(ideal.ring(), gens.gens()).unwrap();
        let z = kernel_of_map(&k.term(i - 1), k.differential(i), k.twists(i)).unwrap();
        let row = ints(&want["hf"]);
        assert_eq!(hf(&z.hilbert_series(), row.len()), row, "{name}: Z_{i}");
    }
}

#[test]
fn pinned_pfaffian_instance() {
    let frozen = fixture("pfaffian4_matrix.json");
    let oracle = fixture("oracle.json");
    let want = &oracle["pfaffian4"];
    assert_eq!(frozen["seed"].as_u64().unwrap(), PFAFFIAN4_SEED);
    let (ideal, m, draw) = generic_pfaffian_gorenstein(Zp::default(), PFAFFIAN4_SEED).unwrap();
    assert_eq!(draw as u64, frozen["draw"].as_u64().unwrap());
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let frozen_rows: Vec<Vec<String>> = frozen["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| e.as_str().unwrap().to_string()).collect())
        .collect();
    assert_eq!(rows, frozen_rows, "builder drifted from the frozen matrix");
    assert!(ideal.same_as(&parse_ideal(&ideal, &want["generators"])).unwrap());
    check_summary(&ideal, want);

    for f in want["fitting_heights"].as_array().unwrap() {
        let k = f["minor_size"].as_u64().unwrap() as usize;
        let fit = Ideal::new(ideal.ring(), minors(ideal.ring(), &m, k).unwrap()).unwrap();
        assert_eq!(fit.height().unwrap(), f["height"].as_i64().unwrap(), "Fitting ideal of {k}-minors");
    }

    let kz = KoszulComplex::new(ideal.ring(), ideal.mingens()).unwrap();
    for (i, row) in want["koszul_hf"].as_array().unwrap().iter().enumerate() {
        let row = ints(row);
        let h = kz.homology(i).unwrap();
        assert_eq!(hf(&h.hilbert_series(), row.len()), row, "pfaffian4: H_{i}");
    }

    let rees = rees_ideal(&ideal, &ReesOptions::default()).unwrap();
    let quadratic: Vec<u32> = rees.min_gen_bidegrees.iter().filter(|&&(_, t)| t == 2).map(|&(x, _)| x).collect();
    let bound = 3;
    let oracle_quadratic = ints(&want["quadratic_equation_x_degrees"]);
    assert_eq!(quadratic.iter().filter(|&&x| x <= bound).map(|&x| x as i64).collect::<Vec<_>>(), oracle_quadratic);
    assert!(syzygetic_range(&rees, 2).unwrap().holds);
}

#[test]
fn circulant_quadratic_fiber_equation() {
    let oracle = fixture("oracle.json");
    let entry = CORPUS.iter().find(|e| e.name == "circulant_minors").unwrap();
    let ideal = corpus_ideal(Zp::default(), entry).unwrap();
    let rees = rees_ideal(&ideal, &ReesOptions { t_degree_cap: Some(2), ..ReesOptions::default() }).unwrap();
    let mut low: Vec<i64> =
        rees.min_gen_bidegrees.iter().filter(|&&(x, t)| t == 2 && x <= 2).map(|&(x, _)| x as i64).collect();
    low.dedup();
    assert_eq!(low, ints(&oracle["circulant_quadratic_equation_x_degrees"]));
}

#[test]
fn circulant_square_membership() {
    let oracle = fixture("oracle.json");
    let ideal = scmlab_core::corpus::example_25a(Zp::default()).unwrap();
    let gens = ideal.gens().to_vec();
    assert_eq!(gens.len(), 6);
    let j = Ideal::new(ideal.ring(), gens[..5].to_vec()).unwrap();
    let ji = j.product(&ideal).unwrap();
    let nf = ji.gb().normal_form(&(&gens[5] * &gens[5])).unwrap();
    assert_eq!(nf.is_zero(), oracle["circulant_last_square_in_JI"].as_bool().unwrap());
}

#[test]
fn two_planes_fitting_heights() {
    let oracle = fixture("oracle.json");
    let want = &oracle["two_planes_fitting"];
    let entry = CORPUS.iter().find(|e| e.name == "two_planes").unwrap();
    let ideal = corpus_ideal(Zp::default(), entry).unwrap();
    let rep = check_gs(&ideal, None, &GsOptions::default()).unwrap();
    let got: Vec<i64> = rep.profile.iter().map(|e| e.height.unwrap()).collect();
    let heights: Vec<i64> = want["heights"].as_array().unwrap().iter().map(|h| h["height"].as_i64().unwrap()).collect();
    assert_eq!(got, heights);
    // ht Fitt_i >= i + 1 for every i, so G_s holds for all s
    assert!(heights.iter().enumerate().all(|(i, &h)| h > i as i64 + 1));
    assert_eq!(rep.verdict, GsVerdict::Pass);
}
