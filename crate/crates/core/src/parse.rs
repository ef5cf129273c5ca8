//! Text format for polynomials.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := coeff? ('*'? var ('^' nat)?)*
//! var   := 'x' | 'y' | 'z'
//! coeff := decimal integer, reduced mod p
//! ```
//!
//! Whitespace is ignored. Printing always writes `*` between factors.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<(usize, char)>,
    pos: usize,
    offset: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, text: &str, offset: usize) -> Self {
        let chars: Vec<_> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { ring, chars, pos: 0, offset, end: offset + text.len() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i + self.offset).unwrap_or(self.end)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.into() })
    }

    /// Decimal digits reduced mod p as they are read, so any length works.
    fn number_mod_p(&mut self) -> Fp {
        let k = self.ring.field();
        let mut acc = Fp::ZERO;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            let digit = k.elem(c.to_digit(10).unwrap() as i64);
            acc = k.add(k.mul(acc, k.elem(10)), digit);
            self.pos += 1;
        }
        acc
    }

    fn exponent(&mut self) -> Result<u16> {
        let start = self.pos;
        let mut acc: u32 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            acc = acc * 10 + c.to_digit(10).unwrap();
            if acc > 1000 {
                self.pos = start;
                return self.error("exponent too large");
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected exponent after '^'");
        }
        Ok(acc as u16)
    }

    fn term(&mut self) -> Result<(Fp, Monomial)> {
        let mut coeff = Fp::ONE;
        let mut seen = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.number_mod_p();
            seen = true;
        }
        let mut exps = [0u16; 3];
        loop {
            let save = self.pos;
            let star = self.peek() == Some('*');
            if star {
                if !seen {
                    return self.error("'*' without a preceding factor");
                }
                self.pos += 1;
            }
            match self.peek() {
                Some(v @ ('x' | 'y' | 'z')) => {
                    self.pos += 1;
                    let idx = (v as u8 - b'x') as usize;
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    exps[idx] += e;
                    seen = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    return Err(Error::UnknownVariable { pos: self.here(), name: c });
                }
                _ if star => return self.error("expected a variable after '*'"),
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if !seen {
            return match self.peek() {
                None => self.error("unexpected end of input"),
                Some(c) => self.error(format!("unexpected character '{c}'")),
            };
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let k = *self.ring.field();
        let mut terms = Vec::new();
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((if negate { k.neg(c) } else { c }, m));
            match self.peek() {
                None => break,
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => return self.error(format!("unexpected character '{c}'")),
            }
            self.pos += 1;
        }
        Ok(self.ring.from_terms(terms))
    }
}

pub(crate) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    Parser::new(ring, text, 0).expr()
}

pub(crate) fn parse_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(Parser::new(ring, piece, offset).expr()?);
        offset += piece.len() + 1;
    }
    Ok(out)
}
