//! Text reader for elements, e.g. `q^2*K^-1*E^2 + (q + 1)*F - K`.
//!
//! Factors are scalars or the generators `K`, `E`, `F` (with integer powers,
//! negative only for `K`); products are brought to normal form, so any
//! ordering of generators is accepted.

use std::str::FromStr;

use super::{normal_form, Gen, UqElement};
use crate::error::{Error, Result};
use crate::qscalar::{exponent, scalar_atom, Cursor, QScalar, Tok};

fn term(cur: &mut Cursor) -> Result<UqElement> {
    let mut coeff = QScalar::one();
    let mut word = Vec::new();
    loop {
        match cur.peek() {
            Some(Tok::Letter(ch @ ('K' | 'E' | 'F'))) => {
                let ch = *ch;
                cur.bump();
                let e = if cur.eat(&Tok::Caret) {
                    let at = cur.offset();
                    let e = exponent(cur)?;
                    if e < 0 && ch != 'K' {
                        return Err(Error::parse(at, "only K may carry a negative power"));
                    }
                    e
                } else {
                    1
                };
                let g = match (ch, e < 0) {
                    ('K', false) => Gen::K,
                    ('K', true) => Gen::KInv,
                    ('E', _) => Gen::E,
                    _ => Gen::F,
                };
                word.extend(std::iter::repeat_n(g, e.unsigned_abs() as usize));
            }
            Some(_) => coeff *= &scalar_atom(cur)?,
            None => return Err(cur.err("unexpected end of input")),
        }
        if !cur.eat(&Tok::Star) {
            return Ok(normal_form(&coeff, &word));
        }
    }
}

impl FromStr for UqElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        if cur.at_end() {
            return Err(cur.err("empty element"));
        }
        let mut out = UqElement::zero();
        let mut first = true;
        while !cur.at_end() {
            let negative = if cur.eat(&Tok::Minus) {
                true
            } else if cur.eat(&Tok::Plus) || first {
                false
            } else {
                return Err(cur.err("expected '+' or '-'"));
            };
            first = false;
            let t = term(&mut cur)?;
            out = if negative { &out - &t } else { &out + &t };
        }
        Ok(out)
    }
}
