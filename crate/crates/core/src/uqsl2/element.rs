use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rewrite::normal_form;
use crate::qscalar::QScalar;

/// Generators of U_q(sl_2) as letters of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    K,
    KInv,
    E,
    F,
}

/// The PBW monomial `K^l E^i F^j`. Ordered lexicographically by `(l, i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UqMonomial {
    pub l: i64,
    pub i: u32,
    pub j: u32,
}

impl UqMonomial {
    pub const fn new(l: i64, i: u32, j: u32) -> Self {
        UqMonomial { l, i, j }
    }

    pub const fn group_like(l: i64) -> Self {
        UqMonomial { l, i: 0, j: 0 }
    }

    /// The grading `i + j`.
    pub fn degree(&self) -> u32 {
        self.i + self.j
    }

    pub fn word(&self) -> Vec<Gen> {
        let k = if self.l >= 0 { Gen::K } else { Gen::KInv };
        let mut w = Vec::with_capacity(self.l.unsigned_abs() as usize + (self.i + self.j) as usize);
        w.extend(std::iter::repeat_n(k, self.l.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Gen::E, self.i as usize));
        w.extend(std::iter::repeat_n(Gen::F, self.j as usize));
        w
    }

    /// Product of two basis monomials, expanded in the PBW basis.
    pub fn mul(&self, rhs: &UqMonomial) -> UqElement {
        let mut w = self.word();
        w.extend(rhs.word());
        normal_form(&QScalar::one(), &w)
    }
}

impl fmt::Display for UqMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.l {
            0 => {}
            1 => parts.push("K".to_string()),
            l => parts.push(format!("K^{l}")),
        }
        match self.i {
            0 => {}
            1 => parts.push("E".to_string()),
            i => parts.push(format!("E^{i}")),
        }
        match self.j {
            0 => {}
            1 => parts.push("F".to_string()),
            j => parts.push(format!("F^{j}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finitely supported linear combination of PBW monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UqElement {
    terms: BTreeMap<UqMonomial, QScalar>,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(UqMonomial::group_like(0))
    }

    pub fn monomial(m: UqMonomial) -> Self {
        Self::term(m, QScalar::one())
    }

    pub fn term(m: UqMonomial, c: QScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &c);
        x
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::term(UqMonomial::group_like(0), c)
    }

    /// `coeff * word`, rewritten to normal form.
    pub fn from_word(coeff: &QScalar, word: &[Gen]) -> Self {
        normal_form(coeff, word)
    }

    pub fn add_term(&mut self, m: UqMonomial, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UqElement, c: &QScalar) {
        for (m, x) in &other.terms {
            self.add_term(*m, &(x * c));
        }
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

    pub fn coeff(&self, m: &UqMonomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UqMonomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &QScalar) -> UqElement {
        if c.is_zero() {
            return UqElement::zero();
        }
        UqElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// The component of degree `n` in the grading by `i + j`.
    pub fn homogeneous_part(&self, n: u32) -> UqElement {
        UqElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Product in U_q(sl_2), bilinear over monomial products.
    pub fn multiply(&self, rhs: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_scaled(&a.mul(b), &(x * y));
            }
        }
        out
    }
}

impl Add for &UqElement {
    type Output = UqElement;

    fn add(self, rhs: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &QScalar::one());
        out
    }
}

impl Sub for &UqElement {
    type Output = UqElement;

    fn sub(self, rhs: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-QScalar::one());
        out
    }
}

impl Neg for &UqElement {
    type Output = UqElement;

    fn neg(self) -> UqElement {
        self.scale(&-QScalar::one())
    }
}

/// Writes `coeff*mono` with sign folded into the separator; `first` controls
/// whether a leading separator is emitted.
pub(crate) fn write_scaled(f: &mut fmt::Formatter<'_>, first: bool, coeff: &QScalar, mono: &str) -> fmt::Result {
    let single_negative = coeff.is_laurent()
        && coeff.num().term_count() == 1
        && coeff.num().leading_coeff().is_some_and(|c| c.is_negative());
    let (sep, c) = match (first, single_negative) {
        (true, true) => ("-", -coeff),
        (true, false) => ("", coeff.clone()),
        (false, true) => (" - ", -coeff),
        (false, false) => (" + ", coeff.clone()),
    };
    write!(f, "{sep}")?;
    let scalar_str = c.to_string();
    let compound = !(c.is_laurent() && c.num().term_count() == 1);
    match (mono == "1", c.is_one()) {
        (true, _) if compound => write!(f, "({scalar_str})"),
        (true, _) => write!(f, "{scalar_str}"),
        (false, true) => write!(f, "{mono}"),
        (false, false) if compound => write!(f, "({scalar_str})*{mono}"),
        (false, false) => write!(f, "{scalar_str}*{mono}"),
    }
}

/// E.g. `q^2*K^-1*E^2 + (q + 1)*F`, terms sorted by `(l, i, j)`.
impl fmt::Display for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            write_scaled(f, k == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for UqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UqElement({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    l: i64,
    i: u32,
    j: u32,
    coeff: QScalar,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    terms: Vec<TermJson>,
}

impl Serialize for UqElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    l: m.l,
                    i: m.i,
                    j: m.j,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UqElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        let mut out = UqElement::zero();
        for t in raw.terms {
            out.add_term(UqMonomial::new(t.l, t.i, t.j), &t.coeff);
        }
        Ok(out)
    }
}
