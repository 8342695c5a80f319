//! Words in the generators `a, b, c, d` of SL_q(2) and their linear combinations.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qscalar::{exponent, scalar_atom, Cursor, QScalar, Tok};
use crate::uqsl2::write_scaled;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            'd' => Some(Letter::D),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    /// `S(a) = d`, `S(b) = -q b`, `S(c) = -q^-1 c`, `S(d) = a`.
    pub fn antipode(self) -> (QScalar, Letter) {
        match self {
            Letter::A => (QScalar::one(), Letter::D),
            Letter::B => (-QScalar::q(), Letter::B),
            Letter::C => (-QScalar::q_pow(-1), Letter::C),
            Letter::D => (QScalar::one(), Letter::A),
        }
    }

    /// The two terms of `Δ(x)`: `Δ(a) = a⊗a + b⊗c`, `Δ(b) = a⊗b + b⊗d`,
    /// `Δ(c) = c⊗a + d⊗c`, `Δ(d) = c⊗b + d⊗d`.
    pub fn coproduct(self) -> [(Letter, Letter); 2] {
        use Letter::*;
        match self {
            A => [(A, A), (B, C)],
            B => [(A, B), (B, D)],
            C => [(C, A), (D, C)],
            D => [(C, B), (D, D)],
        }
    }
}

/// `Δ` of a word, extended multiplicatively: `2^k` pairs of words for a word of length `k`.
pub fn word_coproduct(letters: &[Letter]) -> Vec<(Vec<Letter>, Vec<Letter>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for x in letters {
        out = out
            .into_iter()
            .flat_map(|(l, r)| {
                x.coproduct().into_iter().map(move |(y, z)| {
                    let (mut l, mut r) = (l.clone(), r.clone());
                    l.push(y);
                    r.push(z);
                    (l, r)
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

fn word_text(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    letters
        .iter()
        .map(|l| l.as_char().to_string())
        .collect::<Vec<_>>()
        .join("*")
}

/// A scalar multiple of a single word; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    pub coeff: QScalar,
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(coeff: QScalar, letters: Vec<Letter>) -> Self {
        GenWord { coeff, letters }
    }

    pub fn unit() -> Self {
        GenWord::new(QScalar::one(), Vec::new())
    }

    pub fn letters(letters: &[Letter]) -> Self {
        GenWord::new(QScalar::one(), letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `S(x_1 ⋯ x_k) = S(x_k) ⋯ S(x_1)`.
    pub fn antipode(&self) -> GenWord {
        let mut coeff = self.coeff.clone();
        let mut letters = Vec::with_capacity(self.letters.len());
        for x in self.letters.iter().rev() {
            let (c, y) = x.antipode();
            coeff *= &c;
            letters.push(y);
        }
        GenWord { coeff, letters }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "0");
        }
        write_scaled(f, true, &self.coeff, &word_text(&self.letters))
    }
}

/// A finite linear combination of words, i.e. an element of the free algebra
/// on `a, b, c, d` (no relations are imposed).
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<Vec<Letter>, QScalar>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::from_word(&GenWord::unit())
    }

    pub fn from_word(w: &GenWord) -> Self {
        let mut out = Self::zero();
        out.add_term(w.letters.clone(), &w.coeff);
        out
    }

    pub fn letters(letters: &[Letter]) -> Self {
        Self::from_word(&GenWord::letters(letters))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &QScalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> Vec<GenWord> {
        self.terms
            .iter()
            .map(|(w, c)| GenWord::new(c.clone(), w.clone()))
            .collect()
    }

    pub fn add_term(&mut self, letters: Vec<Letter>, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(letters) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WordSum, c: &QScalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QScalar) -> WordSum {
        let mut out = WordSum::zero();
        out.add_scaled(self, c);
        out
    }

    /// Concatenation product.
    pub fn multiply(&self, rhs: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (u, x) in &self.terms {
            for (v, y) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    pub fn antipode(&self) -> WordSum {
        let mut out = WordSum::zero();
        for w in self.words() {
            let s = w.antipode();
            out.add_term(s.letters, &s.coeff);
        }
        out
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            write_scaled(f, k == 0, c, &word_text(w))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WordSum({self})")
    }
}

/// ```text
/// sum    := ('+'|'-')? term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := ('a'|'b'|'c'|'d') ('^' INT)? | scalar power
/// ```
/// The empty string is the unit.
impl FromStr for WordSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        if cur.at_end() {
            return Ok(WordSum::unit());
        }
        let mut out = WordSum::zero();
        let mut first = true;
        loop {
            let negative = if cur.eat(&Tok::Minus) {
                true
            } else {
                if !cur.eat(&Tok::Plus) && !first {
                    break;
                }
                false
            };
            first = false;
            let mut w = word_term(&mut cur)?;
            if negative {
                w.coeff = -w.coeff;
            }
            out.add_term(w.letters, &w.coeff);
            if cur.at_end() {
                break;
            }
        }
        if !cur.at_end() {
            return Err(cur.err("trailing input"));
        }
        Ok(out)
    }
}

fn word_term(cur: &mut Cursor) -> Result<GenWord> {
    let mut w = GenWord::unit();
    loop {
        match cur.peek() {
            Some(Tok::Letter(ch)) if Letter::from_char(*ch).is_some() => {
                let letter = Letter::from_char(*ch).expect("checked");
                cur.bump();
                let times = if cur.eat(&Tok::Caret) {
                    let at = cur.offset();
                    let e = exponent(cur)?;
                    usize::try_from(e).map_err(|_| Error::parse(at, "generator powers must be non-negative"))?
                } else {
                    1
                };
                w.letters.extend(std::iter::repeat_n(letter, times));
            }
            Some(_) => {
                let x = scalar_atom(cur)?;
                w.coeff *= &x;
            }
            None => return Err(cur.err("unexpected end of input")),
        }
        if !cur.eat(&Tok::Star) {
            return Ok(w);
        }
    }
}

/// The defining relations of SL_q(2), each written as an element that must vanish.
#[derive(Clone, Debug)]
pub struct RelationSet {
    relations: Vec<(&'static str, WordSum)>,
}

impl RelationSet {
    pub fn slq2() -> Self {
        let table = [
            ("ba - q*ab", "b*a - q*a*b"),
            ("db - q*bd", "d*b - q*b*d"),
            ("ca - q*ac", "c*a - q*a*c"),
            ("dc - q*cd", "d*c - q*c*d"),
            ("bc - cb", "b*c - c*b"),
            ("ad - da - (q^-1 - q)*bc", "a*d - d*a - (q^-1 - q)*b*c"),
            ("da - q*bc - 1", "d*a - q*b*c - 1"),
        ];
        RelationSet {
            relations: table
                .iter()
                .map(|(name, text)| (*name, text.parse().expect("relation table parses")))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &WordSum)> {
        self.relations.iter().map(|(n, r)| (*n, r))
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}
