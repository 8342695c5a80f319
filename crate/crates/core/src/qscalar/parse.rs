//! Recursive-descent reader for the scalar text grammar.
//!
//! ```text
//! expr   := sum ('/' sum)?
//! sum    := ('+'|'-')? term (('+'|'-') term)*
//! term   := power ('*' power)*
//! power  := atom ('^' exponent)?
//! atom   := INT | 'q' | '(' expr ')'
//! exponent := ('+'|'-')? INT | '(' ('+'|'-')? INT ')' | '{' ('+'|'-')? INT '}'
//! ```
//!
//! The lexer is shared with the generator-word reader in `duality`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::QScalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Letter(char),
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

pub(crate) fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k] as char;
        let tok = match ch {
            c if c.is_ascii_whitespace() => {
                k += 1;
                continue;
            }
            '0'..='9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n: BigInt = s[start..k].parse().map_err(|_| Error::parse(start, "bad integer"))?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => Tok::Letter(c),
            '^' => Tok::Caret,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            other => return Err(Error::parse(k, format!("unexpected character {other:?}"))),
        };
        out.push((k, tok));
        k += 1;
    }
    Ok(out)
}

pub(crate) struct Cursor {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Cursor {
            toks: lex(src)?,
            pos: 0,
            end: src.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::parse(self.offset(), format!("expected {tok:?}")))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.offset(), msg)
    }
}

pub(crate) fn parse_qscalar(src: &str) -> Result<QScalar> {
    let mut cur = Cursor::new(src)?;
    if cur.at_end() {
        return Err(cur.err("empty scalar"));
    }
    let value = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(value)
}

fn expr(cur: &mut Cursor) -> Result<QScalar> {
    let num = sum(cur)?;
    if cur.eat(&Tok::Slash) {
        let at = cur.offset();
        let den = sum(cur)?;
        return num.checked_div(&den).map_err(|_| Error::parse(at, "zero denominator"));
    }
    Ok(num)
}

fn sum(cur: &mut Cursor) -> Result<QScalar> {
    let mut negate = false;
    if cur.eat(&Tok::Minus) {
        negate = true;
    } else {
        cur.eat(&Tok::Plus);
    }
    let mut acc = term(cur)?;
    if negate {
        acc = -acc;
    }
    loop {
        if cur.eat(&Tok::Plus) {
            acc = acc + term(cur)?;
        } else if cur.eat(&Tok::Minus) {
            acc = acc - term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<QScalar> {
    let mut acc = power(cur)?;
    while cur.eat(&Tok::Star) {
        acc = acc * power(cur)?;
    }
    Ok(acc)
}

fn power(cur: &mut Cursor) -> Result<QScalar> {
    let base = atom(cur)?;
    if cur.eat(&Tok::Caret) {
        let at = cur.offset();
        let e = exponent(cur)?;
        return base.pow(e).map_err(|_| Error::parse(at, "negative power of zero"));
    }
    Ok(base)
}

pub(crate) fn exponent(cur: &mut Cursor) -> Result<i64> {
    let close = if cur.eat(&Tok::LParen) {
        Some(Tok::RParen)
    } else if cur.eat(&Tok::LBrace) {
        Some(Tok::RBrace)
    } else {
        None
    };
    let neg = if cur.eat(&Tok::Minus) {
        true
    } else {
        cur.eat(&Tok::Plus);
        false
    };
    let at = cur.offset();
    let n = match cur.bump() {
        Some(Tok::Int(n)) => i64::try_from(n).map_err(|_| Error::parse(at, "exponent too large"))?,
        _ => return Err(Error::parse(at, "expected integer exponent")),
    };
    if let Some(c) = close {
        cur.expect(&c)?;
    }
    Ok(if neg { -n } else { n })
}

fn atom(cur: &mut Cursor) -> Result<QScalar> {
    let at = cur.offset();
    match cur.bump() {
        Some(Tok::Int(n)) => Ok(QScalar::from_rational(BigRational::from_integer(n))),
        Some(Tok::Letter('q')) => Ok(QScalar::q()),
        Some(Tok::LParen) => {
            let v = expr(cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(v)
        }
        Some(t) => Err(Error::parse(at, format!("unexpected token {t:?}"))),
        None => Err(Error::parse(at, "unexpected end of input")),
    }
}

/// Parses a scalar from an already-positioned cursor (used by the word reader).
pub(crate) fn scalar_atom(cur: &mut Cursor) -> Result<QScalar> {
    power(cur)
}
