use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::script::{IdealExpr, JobScript, ReportCmd, Statement};
use crate::blowup::{analytic_spread, analytic_spread_equigenerated, rees_ideal, syzygetic_range, ReesOptions};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Rationals, Zp, DEFAULT_PRIME};
use crate::homology::DepthStrategy;
use crate::ideal::{matrix_product, minors, pfaffians, GsOptions, Ideal, PolyMatrix};
use crate::koszul::{depth_powers_profile, koszul_homology, verify_theorem24, KoszulOptions, Theorem24Options};
use crate::order::MonomialOrder;
use crate::parse::parse_poly;
use crate::residual::{build_chain, d_sequence_check, verify_lemma21, DSequenceMode};
use crate::ring::{mk_ring, Grading, Ring};

/// Rings with more variables than this only run `rees` reports in tier 1.
pub const TIER1_MAX_VARS: usize = 10;

/// Permutations sampled by the unconditioned d-sequence test beyond 6 elements.
pub const D_SEQUENCE_SAMPLE: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct JobConfig {
    /// Overrides the field of every ring declaration.
    pub field: Option<FieldSpec>,
    pub seed: u64,
    pub tier: u8,
    /// Cap on the `T`-degree of computed Rees equations.
    pub max_degree: Option<u32>,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig { field: None, seed: 0, tier: 1, max_degree: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingEcho {
    pub name: String,
    pub field: String,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealEcho {
    pub name: String,
    pub ring: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FragmentStatus {
    Ok,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fragment {
    pub line: usize,
    pub command: &'static str,
    pub args: ReportCmd,
    pub ideal: String,
    pub generators: Vec<String>,
    pub status: FragmentStatus,
    pub reason: Option<String>,
    /// Some verdict in `data` is undecided or capped.
    pub partial: bool,
    pub data: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: JobConfig,
    pub field: String,
    pub rings: Vec<RingEcho>,
    pub ideals: Vec<IdealEcho>,
    pub results: Vec<Fragment>,
    pub partial: bool,
}

fn resolve_field(declared: &str, line: usize) -> Result<FieldSpec> {
    if declared == "p" {
        return Ok(FieldSpec::PrimeField(DEFAULT_PRIME));
    }
    FieldSpec::parse(declared).map_err(|e| Error::Script { line, msg: e.to_string() })
}

/// Execute the statements in order and collect the report fragments.
pub fn run_job(script: &JobScript, config: &JobConfig) -> Result<Report> {
    if !(1..=2).contains(&config.tier) {
        return Err(Error::Precondition(format!("tier must be 1 or 2, got {}", config.tier)));
    }
    let mut field: Option<FieldSpec> = config.field;
    if config.field.is_none() {
        for st in &script.statements {
            if let Statement::Ring { field: f, .. } = &st.statement {
                let spec = resolve_field(f, st.line)?;
                match field {
                    Some(prev) if prev != spec => {
                        return Err(Error::Script {
                            line: st.line,
                            msg: "all rings of a job must share one field".into(),
                        })
                    }
                    _ => field = Some(spec),
                }
            }
        }
    }
    match field.unwrap_or(FieldSpec::PrimeField(DEFAULT_PRIME)) {
        FieldSpec::Rationals => Runner::new(Rationals, config).run(script),
        FieldSpec::PrimeField(p) => Runner::new(Zp::new(p)?, config).run(script),
    }
}

struct Runner<'a, F: Field> {
    field: F,
    config: &'a JobConfig,
    rings: HashMap<String, Ring<F>>,
    matrices: HashMap<String, (String, PolyMatrix<F>)>,
    ideals: HashMap<String, (String, Ideal<F>)>,
    current: Option<String>,
}

impl<'a, F: Field> Runner<'a, F> {
    fn new(field: F, config: &'a JobConfig) -> Self {
        Runner { field, config, rings: HashMap::new(), matrices: HashMap::new(), ideals: HashMap::new(), current: None }
    }

    fn run(mut self, script: &JobScript) -> Result<Report> {
        let label = self.field.spec().label();
        let mut rings = Vec::new();
        let mut ideals = Vec::new();
        let mut results = Vec::new();
        for st in &script.statements {
            let line = st.line;
            let at_line = |e: Error| match e {
                Error::Syntax { msg, .. } | Error::UnknownVariable(msg) => Error::Script { line, msg },
                other => other,
            };
            match &st.statement {
                Statement::Ring { name, vars, .. } => {
                    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
                    let ring = mk_ring(self.field.clone(), &refs, Grading::Standard, MonomialOrder::DegRevLex)
                        .map_err(|e| Error::Script { line, msg: e.to_string() })?;
                    rings.push(RingEcho { name: name.clone(), field: label.clone(), vars: vars.clone() });
                    self.rings.insert(name.clone(), ring);
                    self.current = Some(name.clone());
                }
                Statement::Matrix { name, rows } => {
                    let (rname, ring) = self.current_ring();
                    let m = rows
                        .iter()
                        .map(|r| r.iter().map(|e| parse_poly(&ring, e)).collect::<Result<Vec<_>>>())
                        .collect::<Result<PolyMatrix<F>>>()
                        .map_err(at_line)?;
                    self.matrices.insert(name.clone(), (rname, m));
                }
                Statement::Ideal { name, terms } => {
                    let (rname, ring) = self.current_ring();
                    let mut gens = Vec::new();
                    for t in terms {
                        gens.extend(self.ideal_expr(&rname, &ring, t, line).map_err(at_line)?);
                    }
                    let ideal = Ideal::new(&ring, gens)?;
                    ideals.push(IdealEcho {
                        name: name.clone(),
                        ring: rname.clone(),
                        generators: ideal.mingens().iter().map(ToString::to_string).collect(),
                    });
                    self.ideals.insert(name.clone(), (rname, ideal));
                }
                Statement::Report(cmd) => results.push(self.report(cmd, line)?),
            }
        }
        let partial = results.iter().any(|f| f.partial || f.status == FragmentStatus::Skipped);
        Ok(Report {
            tool: "scmlab",
            version: env!("CARGO_PKG_VERSION"),
            config: self.config.clone(),
            field: label,
            rings,
            ideals,
            results,
            partial,
        })
    }

    fn current_ring(&self) -> (String, Ring<F>) {
        // the parser guarantees a ring precedes matrices and ideals
        let name = self.current.clone().expect("ring declared");
        let ring = self.rings[&name].clone();
        (name, ring)
    }

    fn matrix(&self, ring: &str, name: &str, line: usize) -> Result<&PolyMatrix<F>> {
        let (r, m) = &self.matrices[name];
        if r != ring {
            return Err(Error::Script { line, msg: format!("matrix `{name}` belongs to ring `{r}`, not `{ring}`") });
        }
        Ok(m)
    }

    fn ideal_expr(&self, rname: &str, ring: &Ring<F>, t: &IdealExpr, line: usize) -> Result<Vec<crate::Polynomial<F>>> {
        match t {
            IdealExpr::Minors { matrix, k } => minors(ring, self.matrix(rname, matrix, line)?, *k),
            IdealExpr::Pfaffians { matrix, k } => pfaffians(ring, self.matrix(rname, matrix, line)?, *k),
            IdealExpr::Gens { polys } => polys.iter().map(|p| parse_poly(ring, p)).collect(),
            IdealExpr::Product { left, right } => {
                let p = matrix_product(ring, self.matrix(rname, left, line)?, self.matrix(rname, right, line)?)?;
                Ok(p.into_iter().flatten().collect())
            }
            IdealExpr::Named { ideal } => {
                let (r, i) = &self.ideals[ideal];
                if r != rname {
                    return Err(Error::Script { line, msg: format!("ideal `{ideal}` belongs to ring `{r}`") });
                }
                Ok(i.gens().to_vec())
            }
        }
    }

    fn koszul_options(&self) -> KoszulOptions {
        KoszulOptions { depth: DepthStrategy::Auto, seed: self.config.seed, early_exit: true }
    }

    fn report(&self, cmd: &ReportCmd, line: usize) -> Result<Fragment> {
        let (_, ideal) = &self.ideals[cmd.ideal()];
        let mut frag = Fragment {
            line,
            command: cmd.name(),
            args: cmd.clone(),
            ideal: cmd.ideal().to_string(),
            generators: ideal.mingens().iter().map(ToString::to_string).collect(),
            status: FragmentStatus::Ok,
            reason: None,
            partial: false,
            data: Value::Null,
        };
        let heavy = !matches!(cmd, ReportCmd::Rees { .. });
        if self.config.tier < 2 && heavy && ideal.ring().nvars() > TIER1_MAX_VARS {
            frag.status = FragmentStatus::Skipped;
            frag.reason = Some(format!("rings with more than {TIER1_MAX_VARS} variables need tier 2"));
            return Ok(frag);
        }
        let seed = self.config.seed;
        let rees_opts = ReesOptions { t_degree_cap: self.config.max_degree, max_basis: None };
        let (data, partial) = match cmd {
            ReportCmd::Scm { .. } => {
                let k = koszul_homology(ideal, &self.koszul_options())?;
                let quadratic = rees_ideal(ideal, &ReesOptions { t_degree_cap: Some(2), max_basis: None })?;
                let syz = syzygetic_range(&quadratic, 2)?;
                let partial = k.strongly_cm.is_none();
                (
                    json!({
                        "mu": ideal.mu(),
                        "height": k.g,
                        "koszul": k.entries,
                        "missing": k.missing,
                        "h0_matches_quotient": k.h0_matches_quotient,
                        "vanishing_above_n_minus_g": k.vanishing_above_n_minus_g,
                        "strongly_cm": k.strongly_cm,
                        "syzygetic": syz,
                    }),
                    partial,
                )
            }
            ReportCmd::Rees { .. } => {
                let p = rees_ideal(ideal, &rees_opts)?;
                let ell = if p.complete {
                    Some(analytic_spread(&p)?)
                } else if ideal.equigenerated_degree().is_some() {
                    Some(analytic_spread_equigenerated(ideal)?)
                } else {
                    None
                };
                let linear_type = if p.complete { Some(p.is_linear_type()?) } else { None };
                (
                    json!({
                        "mu": ideal.mu(),
                        "height": ideal.height()?,
                        "complete": p.complete,
                        "t_degree_cap": p.t_degree_cap,
                        "equations": p.q.mingens().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "linear_equations": p.q1.mu(),
                        "min_gen_bidegrees": p.min_gen_bidegrees,
                        "linear_type": linear_type,
                        "syzygetic": syzygetic_range(&p, 2).ok(),
                        "analytic_spread": ell,
                        "stats": {
                            "steps": p.stats.steps,
                            "pairs_processed": p.stats.pairs_processed,
                            "max_rows": p.stats.max_rows,
                            "max_cols": p.stats.max_cols,
                        },
                    }),
                    !p.complete,
                )
            }
            ReportCmd::Theorem24 { .. } => {
                let opts = Theorem24Options {
                    koszul: self.koszul_options(),
                    gs: GsOptions { seed, ..GsOptions::default() },
                    rees: rees_opts,
                };
                let r = verify_theorem24(ideal, &opts)?;
                let partial = r.side_a.is_none() || r.side_b.is_none();
                (serde_json::to_value(&r).expect("serializable"), partial)
            }
            ReportCmd::Lemma21 { s, t_max, .. } => {
                let chain = build_chain(ideal, *s, seed)?;
                let mode = DSequenceMode::Unconditioned { sample: D_SEQUENCE_SAMPLE, seed };
                let d = d_sequence_check(ideal.ring(), &chain.elements, mode)?;
                let l = verify_lemma21(&chain, *t_max, DepthStrategy::Auto)?;
                (json!({ "chain": chain.summary(), "d_sequence": d, "lemma21": l }), false)
            }
            ReportCmd::Profile { j_max, .. } => {
                let p = depth_powers_profile(ideal, *j_max, &self.koszul_options())?;
                let partial = p.holds.is_none();
                (serde_json::to_value(&p).expect("serializable"), partial)
            }
        };
        frag.data = data;
        frag.partial = partial;
        Ok(frag)
    }
}
