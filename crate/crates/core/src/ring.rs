//! Polynomial ring contexts: coefficient field, variable names, grading and order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Mono, MAX_VARS};
use crate::order::MonomialOrder;

/// How variables are graded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Every variable has degree 1.
    Standard,
    /// One positive weight per variable.
    Weights(Vec<u32>),
    /// A degree vector per variable (e.g. bidegrees); entries are non-negative and
    /// no vector is zero.
    Multi(Vec<Vec<u32>>),
}

/// A polynomial ring `k[x_1, ..., x_n]` with a (multi)grading and a global order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    grading: Vec<Vec<u32>>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// Shared handle to a ring.
pub type Ring<F> = Arc<PolyRing<F>>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Build a ring context.
pub fn mk_ring<F: Field>(field: F, vars: &[&str], grading: Grading, order: MonomialOrder) -> Result<Ring<F>> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    PolyRing::new(field, names, grading, order).map(Arc::new)
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, grading: Grading, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !valid_name(n) {
                return Err(Error::Syntax { pos: 0, msg: format!("invalid variable name `{n}`") });
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        let n = names.len();
        let grading: Vec<Vec<u32>> = match grading {
            Grading::Standard => vec![vec![1]; n],
            Grading::Weights(w) => {
                if w.len() != n {
                    return Err(Error::InvalidWeights(format!("{} weights for {n} variables", w.len())));
                }
                w.into_iter().map(|x| vec![x]).collect()
            }
            Grading::Multi(m) => {
                if m.len() != n {
                    return Err(Error::InvalidWeights(format!("{} degree vectors for {n} variables", m.len())));
                }
                let k = m.first().map_or(1, |v| v.len());
                if k == 0 || m.iter().any(|v| v.len() != k) {
                    return Err(Error::InvalidWeights("degree vectors must share one positive length".into()));
                }
                m
            }
        };
        let weights: Vec<u32> = grading.iter().map(|v| v.iter().sum()).collect();
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!("variable `{}` has zero weight", names[i])));
        }
        order.validate(n).map_err(Error::InvalidOrder)?;
        Ok(PolyRing { field, names, grading, weights, order })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
    /// Total positive weight of each variable (sum of its degree vector).
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
    pub fn grading(&self) -> &[Vec<u32>] {
        &self.grading
    }
    pub fn grading_rank(&self) -> usize {
        self.grading.first().map_or(1, |v| v.len())
    }
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    pub fn mono(&self, exps: &[u16]) -> Mono {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        Mono::from_exponents(exps, &self.weights)
    }

    pub fn var_mono(&self, i: usize) -> Mono {
        Mono::var(i, &self.weights)
    }

    pub fn multidegree(&self, m: &Mono) -> Vec<i64> {
        let k = self.grading_rank();
        let mut d = vec![0i64; k];
        for i in 0..self.nvars() {
            let e = m.exp(i) as i64;
            if e > 0 {
                for c in 0..k {
                    d[c] += e * self.grading[i][c] as i64;
                }
            }
        }
        d
    }

    /// Same variables and grading under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing<F>> {
        order.validate(self.nvars()).map_err(Error::InvalidOrder)?;
        Ok(PolyRing { order, ..self.clone() })
    }

    /// Same variables and order with every variable of weight one.
    pub fn standard_graded(&self) -> PolyRing<F> {
        PolyRing { grading: vec![vec![1]; self.nvars()], weights: vec![1; self.nvars()], ..self.clone() }
    }

    pub fn format_mono(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Whether two handles denote interchangeable rings.
pub fn same_ring<F: Field>(a: &Ring<F>, b: &Ring<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rationals, Zp};

    #[test]
    fn rejects_bad_rings() {
        let f = Zp::default();
        assert_eq!(
            mk_ring(f, &["x", "x"], Grading::Standard, MonomialOrder::DegRevLex).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert!(matches!(
            mk_ring(f, &["x", "y"], Grading::Weights(vec![1, 0]), MonomialOrder::DegRevLex),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            mk_ring(f, &["x"], Grading::Multi(vec![vec![0, 0]]), MonomialOrder::DegRevLex),
            Err(Error::InvalidWeights(_))
        ));
    }

    #[test]
    fn equal_arguments_give_interchangeable_rings() {
        let a = mk_ring(Rationals, &["x"], Grading::Standard, MonomialOrder::Lex).unwrap();
        let b = mk_ring(Rationals, &["x"], Grading::Standard, MonomialOrder::Lex).unwrap();
        assert!(same_ring(&a, &b));
    }

    #[test]
    fn bigraded_weights_are_summed() {
        let r = mk_ring(
            Zp::default(),
            &["x", "t", "T"],
            Grading::Multi(vec![vec![1, 0], vec![0, 1], vec![2, 1]]),
            MonomialOrder::elimination(1, 3),
        )
        .unwrap();
        assert_eq!(r.weights(), &[1, 1, 3]);
        assert_eq!(r.multidegree(&r.mono(&[1, 1, 2])), vec![5, 3]);
    }
}
