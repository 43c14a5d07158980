//! Monomial orders on rings and their extensions to free modules.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::monomial::{Mono, Term};

/// Order used inside one block of a block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InnerOrder {
    DegRevLex,
    Lex,
}

/// A global monomial order on a polynomial ring.
///
/// `DegRevLex` compares the weighted degree first and breaks ties by reverse
/// lexicographic comparison; `Block` compares consecutive blocks of variables
/// one after another, each with its own inner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block(Vec<(usize, InnerOrder)>),
}

impl MonomialOrder {
    /// Block order eliminating the first `head` variables, degrevlex inside both blocks.
    pub fn elimination(head: usize, nvars: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![(head, InnerOrder::DegRevLex), (nvars - head, InnerOrder::DegRevLex)])
    }

    /// Whether every monomial involving one of the first `head` variables is larger
    /// than every monomial free of them.
    pub fn eliminates(&self, head: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::DegRevLex => head == 0,
            MonomialOrder::Block(blocks) => {
                let mut acc = 0;
                for (size, _) in blocks {
                    if acc == head {
                        return true;
                    }
                    acc += size;
                }
                acc == head
            }
        }
    }

    pub fn validate(&self, nvars: usize) -> Result<(), String> {
        if let MonomialOrder::Block(blocks) = self {
            let total: usize = blocks.iter().map(|b| b.0).sum();
            if total != nvars {
                return Err(format!("block sizes sum to {total}, ring has {nvars} variables"));
            }
            if blocks.iter().any(|b| b.0 == 0) {
                return Err("empty block".into());
            }
        }
        Ok(())
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono, weights: &[u32]) -> Ordering {
        let n = weights.len();
        match self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b, 0, n)),
            MonomialOrder::Lex => lex(a, b, 0, n),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for &(size, inner) in blocks {
                    let end = start + size;
                    let o = match inner {
                        InnerOrder::Lex => lex(a, b, start, end),
                        InnerOrder::DegRevLex => {
                            let da: u32 = (start..end).map(|i| a.exp(i) as u32 * weights[i]).sum();
                            let db: u32 = (start..end).map(|i| b.exp(i) as u32 * weights[i]).sum();
                            da.cmp(&db).then_with(|| revlex(a, b, start, end))
                        }
                    };
                    if o != Ordering::Equal {
                        return o;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }
}

#[inline]
fn lex(a: &Mono, b: &Mono, start: usize, end: usize) -> Ordering {
    for i in start..end {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn revlex(a: &Mono, b: &Mono, start: usize, end: usize) -> Ordering {
    for i in (start..end).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Extension of a ring order to terms `m * e_i` of a free module. Lower
/// component indices are larger.
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleOrder {
    /// Compare monomials first, then positions.
    TermOverPosition,
    /// Compare positions first, then monomials.
    PositionOverTerm,
    /// Compare `m * lead_i` in the parent module (term over position), then positions.
    Schreyer(Arc<Vec<Term>>),
    /// Components below `head` dominate and are ordered term over position; the
    /// remaining components are re-indexed from zero and ordered by `tail`.
    Elimination { head: u32, tail: Box<ModuleOrder> },
}

impl ModuleOrder {
    pub fn cmp(&self, ring: &MonomialOrder, weights: &[u32], a: &Term, b: &Term) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition => ring.cmp(&a.mono, &b.mono, weights).then_with(|| b.comp.cmp(&a.comp)),
            ModuleOrder::PositionOverTerm => b.comp.cmp(&a.comp).then_with(|| ring.cmp(&a.mono, &b.mono, weights)),
            ModuleOrder::Schreyer(leads) => {
                let ta = leads[a.comp as usize].times(&a.mono);
                let tb = leads[b.comp as usize].times(&b.mono);
                ring.cmp(&ta.mono, &tb.mono, weights)
                    .then_with(|| tb.comp.cmp(&ta.comp))
                    .then_with(|| b.comp.cmp(&a.comp))
            }
            ModuleOrder::Elimination { head, tail } => {
                let ha = a.comp < *head;
                let hb = b.comp < *head;
                match (ha, hb) {
                    (true, true) => ModuleOrder::TermOverPosition.cmp(ring, weights, a, b),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => {
                        let sa = Term::new(a.mono, a.comp - head);
                        let sb = Term::new(b.mono, b.comp - head);
                        tail.cmp(ring, weights, &sa, &sb)
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Mono {
        Mono::from_exponents(e, &[1, 1, 1])
    }

    #[test]
    fn revlex_basic() {
        let o = MonomialOrder::DegRevLex;
        let w = [1, 1, 1];
        // x*z < y^2 in degrevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &w), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0]), &w), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0]), &w), Ordering::Greater);
    }

    #[test]
    fn block_eliminates_head() {
        let o = MonomialOrder::elimination(1, 3);
        let w = [1, 1, 1];
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5]), &w), Ordering::Greater);
        assert!(o.eliminates(1));
        assert!(!MonomialOrder::DegRevLex.eliminates(1));
    }
}
