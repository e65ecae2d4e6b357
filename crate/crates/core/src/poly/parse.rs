//! Recursive-descent parser for polynomial expressions.
//!
//! Accepts integer and rational coefficients, variables of the ring,
//! `+ - * ^` and parentheses. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    /// Offset reported when input ends early: the last token seen.
    fn eof_offset(&self) -> usize {
        self.toks.last().map(|t| t.1).unwrap_or(0)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.bump() {
            Some((Tok::Int(n), off)) => {
                u32::try_from(n).map_err(|_| syntax(off, "exponent too large"))
            }
            Some((_, off)) => Err(syntax(off, "expected a non-negative integer exponent")),
            None => Err(syntax(self.eof_offset(), "expected an exponent")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some((Tok::Int(n), _)) => {
                let mut value = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some((Tok::Int(d), off)) => {
                            if d.is_zero() {
                                return Err(syntax(off, "zero denominator"));
                            }
                            value /= Rational::from_integer(d);
                        }
                        Some((_, off)) => return Err(syntax(off, "expected a denominator")),
                        None => return Err(syntax(self.eof_offset(), "expected a denominator")),
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some((Tok::Ident(name), off)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.ring, i).expect("index in range")),
                None => Err(Error::UnknownVariable { name, offset: off }),
            },
            Some((Tok::LParen, open)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    Some((_, off)) => Err(syntax(off, "expected `)`")),
                    None => Err(syntax(open, "unclosed `(`")),
                }
            }
            Some((_, off)) => Err(syntax(off, "expected a coefficient, variable or `(`")),
            None => Err(syntax(self.eof_offset(), "expected a term")),
        }
    }
}

/// Parse `text` into a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_quartic() {
        let f = parse_polynomial("x^4 - x^2*y^2 + y^5", &xy()).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.total_degree(), Some(5));
    }

    #[test]
    fn zero_has_no_terms() {
        let f = parse_polynomial("0", &xy()).unwrap();
        assert!(f.is_zero());
        assert!(f.terms().is_empty());
    }

    #[test]
    fn dangling_operator_reports_offset() {
        match parse_polynomial("x^2 +", &xy()) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_polynomial("x + 2*z", &xy()),
            Err(Error::UnknownVariable {
                name: "z".into(),
                offset: 6
            })
        );
    }

    #[test]
    fn other_syntax_errors() {
        for bad in ["", "x^", "3/0*x", "(x+y", "x y", "x^y", "x $ y"] {
            assert!(
                matches!(parse_polynomial(bad, &xy()), Err(Error::Syntax { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn rational_coefficients_and_parentheses() {
        let r = xy();
        let f = parse_polynomial("3/2*x - (x - y)^2", &r).unwrap();
        let g = parse_polynomial("-x^2 + 2*x*y - y^2 + 3/2*x", &r).unwrap();
        assert_eq!(f, g);
        assert_eq!(
            parse_polynomial("-  2 * x", &r).unwrap().to_string(),
            "-2*x"
        );
    }
}
