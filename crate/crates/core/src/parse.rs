//! Text syntax for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number ['/' number] | var ['^' int] | '(' poly ')' ['^' int]
//! var    := [A-Za-z][A-Za-z0-9_]*
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub fn parse_poly<F: Field>(ring: &Ring<F>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let out = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    src: &'a [u8],
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().expect("digits parse"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.integer()?;
            u16::try_from(e).map(u32::from).map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.field().from_rational(&num, &den).map_err(|e| match e {
                    Error::Coefficient(m) => Error::Coefficient(format!("at position {at}: {m}")),
                    other => other,
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                let e = self.exponent()?;
                let mut exps = vec![0u16; self.ring.nvars()];
                exps[i] = e as u16;
                Ok(Polynomial::monomial(self.ring, self.ring.mono(&exps), self.ring.field().one()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rationals, Zp};
    use crate::order::MonomialOrder;
    use crate::ring::{mk_ring, Grading};
    use proptest::prelude::*;

    fn lex_xy() -> Ring<Rationals> {
        mk_ring(Rationals, &["x", "y"], Grading::Standard, MonomialOrder::Lex).unwrap()
    }

    #[test]
    fn parses_binomial() {
        let r = mk_ring(Zp::default(), &["x1", "x2", "x3"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        let p = parse_poly(&r, "x1*x3 - x2^2").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "-x2^2 + x1*x3");
    }

    #[test]
    fn order_normalization() {
        assert_eq!(parse_poly(&lex_xy(), "y+x").unwrap().to_string(), "x + y");
    }

    #[test]
    fn modular_normalization() {
        let r = mk_ring(Zp::new(5).unwrap(), &["x"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(parse_poly(&r, "7*x").unwrap().to_string(), "2*x");
        assert!(matches!(parse_poly(&r, "1/5*x"), Err(Error::Coefficient(_))));
    }

    #[test]
    fn errors_carry_positions() {
        let r = lex_xy();
        assert_eq!(parse_poly(&r, "x + z").unwrap_err(), Error::UnknownVariable("z".into()));
        assert!(matches!(parse_poly(&r, "x + * y"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly(&r, "x y"), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn rationals_and_parentheses() {
        let r = lex_xy();
        assert_eq!(parse_poly(&r, "3/6*x - (x - y)^2").unwrap().to_string(), "-x^2 + 2*x*y + 1/2*x - y^2");
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, u16, u16)>> {
        prop::collection::vec((-20i64..20, 0u16..4, 0u16..4), 0..6)
    }

    proptest! {
        #[test]
        fn canonical_string_round_trips(terms in arb_poly()) {
            let r = mk_ring(Zp::new(7).unwrap(), &["x", "y"], Grading::Standard, MonomialOrder::DegRevLex).unwrap();
            let f = r.field();
            let p = Polynomial::from_terms(&r, terms.iter().map(|&(c, a, b)| (r.mono(&[a, b]), f.from_i64(c))).collect());
            let s = p.to_canonical_string();
            let q = parse_poly(&r, &s).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_canonical_string(), s);
        }
    }
}
