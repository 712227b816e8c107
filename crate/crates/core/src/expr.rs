//! Text expressions such as `2*s[2,1] - 1/3*p[3]` or `s[2][s[1,1] + s[2]]`.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := [coeff '*'] factor ('[' expr ']')*
//!          | coeff
//! factor  := basis '[' parts ']' | '(' expr ')'
//! coeff   := integer | integer '/' integer
//! basis   := 's' | 'm' | 'h' | 'e' | 'p'
//! parts   := ε | integer (',' integer)*
//! ```
//!
//! Whitespace is ignored. A bracket after a factor applies plethysm, with
//! the factor as the outer function.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::Method;
use crate::symfunc::{Basis, Rational, SymFunc};
use crate::Context;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Element(Basis, Partition),
    Constant(Rational),
    Scale(Rational, Box<Expr>),
    Sum(Vec<Expr>),
    Negate(Box<Expr>),
    Plethysm(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, format!("unexpected `{}`", p.peek_char())));
        }
        Ok(e)
    }

    pub fn evaluate(&self, ctx: &Context, method: Method) -> Result<SymFunc> {
        Ok(match self {
            Expr::Element(b, p) => SymFunc::basis_element(*b, p.clone()),
            Expr::Constant(c) => SymFunc::constant(Basis::Schur, c.clone()),
            Expr::Scale(c, e) => e.evaluate(ctx, method)?.scale(c),
            Expr::Negate(e) => -&e.evaluate(ctx, method)?,
            Expr::Sum(terms) => {
                let mut it = terms.iter();
                let mut acc = it.next().expect("sums are nonempty").evaluate(ctx, method)?;
                for t in it {
                    let v = t.evaluate(ctx, method)?;
                    acc += &ctx.to_basis(&v, acc.basis());
                }
                acc
            }
            Expr::Plethysm(f, g) => {
                let f = f.evaluate(ctx, method)?;
                let g = g.evaluate(ctx, method)?;
                ctx.plethysm(&f, &g, method)?
            }
        })
    }

    /// The `(outer, inner)` pair when the whole expression is one plethysm.
    pub fn as_plethysm(&self) -> Option<(&Expr, &Expr)> {
        match self {
            Expr::Plethysm(f, g) => Some((f, g)),
            _ => None,
        }
    }
}

/// Parses and evaluates `text`.
pub fn parse_expr(ctx: &Context, text: &str, method: Method) -> Result<SymFunc> {
    Expr::parse(text)?.evaluate(ctx, method)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn peek_char(&self) -> char {
        self.src.get(self.pos).map_or(' ', |&b| b as char)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(b) => format!("`{}`", b as char),
                None => "end of input".to_string(),
            };
            Err(Error::parse(self.pos, format!("expected `{}`, found {found}", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            terms.push(if negative { Expr::Negate(Box::new(t)) } else { t });
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            let c = self.coeff()?;
            if !self.eat(b'*') {
                return Ok(Expr::Constant(c));
            }
            let f = self.postfix()?;
            return Ok(Expr::Scale(c, Box::new(f)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut f = self.factor()?;
        while self.eat(b'[') {
            let g = self.expr()?;
            self.expect(b']')?;
            f = Expr::Plethysm(Box::new(f), Box::new(g));
        }
        Ok(f)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b) => {
                let basis = Basis::from_letter(b as char).ok_or_else(|| {
                    Error::parse(self.pos, format!("expected a basis letter s, m, h, e or p, found `{}`", b as char))
                })?;
                self.pos += 1;
                self.expect(b'[')?;
                let parts = self.parts()?;
                self.expect(b']')?;
                Ok(Expr::Element(basis, Partition::new(parts)?))
            }
            None => Err(Error::parse(self.pos, "expected a term, found end of input")),
        }
    }

    fn parts(&mut self) -> Result<Vec<u32>> {
        let mut parts = Vec::new();
        if self.peek() == Some(b']') {
            return Ok(parts);
        }
        loop {
            let pos = self.pos;
            let n = self.integer()?;
            parts.push(
                u32::try_from(&n).map_err(|_| Error::parse(pos, format!("part {n} is too large")))?,
            );
            if !self.eat(b',') {
                return Ok(parts);
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::{ratio, rational};

    fn eval(text: &str) -> Result<SymFunc> {
        parse_expr(&Context::new(), text, Method::Auto)
    }

    #[test]
    fn sums_and_coefficients() {
        assert_eq!(
            eval("s[2]+s[1,1]").unwrap(),
            &SymFunc::s(partition![2]) + &SymFunc::s(partition![1, 1])
        );
        assert_eq!(
            eval(" - 2 * s[2] + 1/2*s[ ] ").unwrap().to_string(),
            "-2*s[2] + 1/2*s[]"
        );
        assert_eq!(eval("s[2] - s[2]").unwrap(), SymFunc::zero(Basis::Schur));
        assert_eq!(eval("0").unwrap(), SymFunc::zero(Basis::Schur));
        assert_eq!(
            eval("p[2] + 3/6").unwrap(),
            &SymFunc::basis_element(Basis::PowerSum, partition![2])
                + &SymFunc::constant(Basis::PowerSum, ratio(1, 2))
        );
    }

    #[test]
    fn mixed_bases_follow_the_left_operand() {
        let f = eval("m[1,1] + s[2]").unwrap();
        assert_eq!(f.basis(), Basis::Monomial);
        assert_eq!(f.coefficient(&partition![1, 1]), rational(2));
        assert_eq!(f.coefficient(&partition![2]), rational(1));
    }

    #[test]
    fn plethysm_postfix() {
        assert_eq!(
            eval("s[2][s[2]]").unwrap(),
            &SymFunc::s(partition![4]) + &SymFunc::s(partition![2, 2])
        );
        assert_eq!(eval("2*s[1][s[3]]").unwrap(), SymFunc::s(partition![3]).scale(&rational(2)));
        assert_eq!(eval("(s[1]+s[1])[s[2]]").unwrap(), SymFunc::s(partition![2]).scale(&rational(2)));
    }

    #[test]
    fn errors() {
        assert_eq!(eval("s[1,2]"), Err(Error::NotAPartition(vec![1, 2])));
        assert_eq!(eval("1/0*s[1]"), Err(Error::DivisionByZero));
        assert!(matches!(eval("s[2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(eval("q[2]"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(eval("s[2] s[1]"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(eval(""), Err(Error::Parse { pos: 0, .. })));
    }
}
