//! Expression parser for the grammar
//! `term ::= rational | var | term op term | term '^' nat | '(' term ')'`
//! with op in {+, -, *}, plus unary minus. Whitespace is insignificant.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingRc;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((start, Tok::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((start, Tok::Minus));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((start, Tok::Star));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((start, Tok::Caret));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((start, Tok::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((start, Tok::RParen));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let num = self.read_digits();
                    // Optional `/denominator` makes a rational literal.
                    if self.pos < self.src.len() && self.src[self.pos] == b'/' {
                        let save = self.pos;
                        self.pos += 1;
                        if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                            let den = self.read_digits();
                            if den == BigInt::from(0) {
                                return Err(Error::Parse {
                                    pos: save,
                                    msg: "zero denominator".into(),
                                });
                            }
                            out.push((start, Tok::Num(BigRational::new(num, den))));
                            continue;
                        }
                        self.pos = save;
                    }
                    out.push((start, Tok::Num(BigRational::from_integer(num))));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let s = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[s..self.pos]).unwrap().to_string();
                    out.push((start, Tok::Ident(name)));
                }
                other => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            }
        }
        Ok(out)
    }

    fn read_digits(&mut self) -> BigInt {
        let s = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[s..self.pos]).unwrap().parse().unwrap()
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    ring: &'a RingRc,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Poly> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    // power := atom ('^' nat)*
    fn power(&mut self) -> Result<Poly> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let p = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) if n.is_integer() && !num::Signed::is_negative(&n) => {
                    let e: u32 = n.numer().try_into().map_err(|_| Error::Parse {
                        pos: p,
                        msg: "exponent too large".into(),
                    })?;
                    base = base.pow(e);
                }
                _ => {
                    return Err(Error::Parse { pos: p, msg: "expected natural number exponent".into() })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let p = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Poly::constant(self.ring, n)),
            Some(Tok::Ident(name)) => Poly::var_named(self.ring, &name),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let p2 = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse { pos: p2, msg: "expected `)`".into() }),
                }
            }
            Some(t) => Err(Error::Parse { pos: p, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Parse { pos: p, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses an expression into a canonical `Poly` in the given ring.
pub fn parse_poly(text: &str, ring: &RingRc) -> Result<Poly> {
    let toks = Lexer::new(text).tokens()?;
    let mut parser = Parser { toks, idx: 0, ring, end: text.len() };
    let p = parser.expr()?;
    if parser.idx != parser.toks.len() {
        return Err(Error::Parse {
            pos: parser.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::ring::Ring;
    use num::rational::BigRational;

    #[test]
    fn spec_examples() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let p = parse_poly("x^2*y - 3*y", &r).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![2, 1])), BigRational::from_integer(1.into()));
        assert_eq!(p.coefficient(&Monomial(vec![0, 1])), BigRational::from_integer((-3).into()));
        assert_eq!(p.num_terms(), 2);

        assert!(parse_poly("0", &r).unwrap().is_zero());

        let sq = parse_poly("(x+y)^2", &r).unwrap();
        assert_eq!(sq, parse_poly("x^2 + 2*x*y + y^2", &r).unwrap());
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let r = Ring::new(vec!["x"]).unwrap();
        let p = parse_poly("3/2*x - 1/2*x", &r).unwrap();
        assert_eq!(p, parse_poly("x", &r).unwrap());
        assert_eq!(parse_poly("-x", &r).unwrap(), parse_poly("0 - x", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::new(vec!["x"]).unwrap();
        match parse_poly("x + z", &r) {
            Err(Error::UnknownVariable(v)) => assert_eq!(v, "z"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
        match parse_poly("x + ", &r) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly("x ? y", &r).is_err());
    }

    #[test]
    fn display_round_trips() {
        let r = Ring::new(vec!["x", "y", "z"]).unwrap();
        for s in ["x^2*y - 3*y + 1/2", "-x + y*z", "0", "7", "x^10 - y^10"] {
            let p = parse_poly(s, &r).unwrap();
            let q = parse_poly(&p.to_string(), &r).unwrap();
            assert_eq!(p, q);
        }
    }
}
