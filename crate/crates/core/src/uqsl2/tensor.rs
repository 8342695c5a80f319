use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::write_scaled;
use super::{UqElement, UqMonomial};
use crate::qscalar::QScalar;

/// A finitely supported element of `U^{⊗ arity}`, keyed by tuples of PBW monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UqTensor {
    arity: usize,
    terms: BTreeMap<Vec<UqMonomial>, QScalar>,
}

impl UqTensor {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be positive");
        UqTensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The element `u` viewed as a tensor with one leg.
    pub fn from_element(u: &UqElement) -> Self {
        let mut t = Self::zero(1);
        for (m, c) in u.terms() {
            t.add_term(vec![*m], c);
        }
        t
    }

    pub fn pure(legs: &[UqElement]) -> Self {
        let mut t = UqTensor::from_element(&legs[0]);
        for leg in &legs[1..] {
            t = t.tensor(&UqTensor::from_element(leg));
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<UqMonomial>, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, legs: &[UqMonomial]) -> QScalar {
        self.terms.get(legs).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn add_term(&mut self, legs: Vec<UqMonomial>, c: &QScalar) {
        assert_eq!(legs.len(), self.arity, "leg count must match arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn add_scaled(&mut self, other: &UqTensor, c: &QScalar) {
        assert_eq!(self.arity, other.arity);
        for (legs, x) in &other.terms {
            self.add_term(legs.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QScalar) -> UqTensor {
        let mut out = UqTensor::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &UqTensor) -> UqTensor {
        let mut out = self.clone();
        out.add_scaled(other, &-QScalar::one());
        out
    }

    /// Outer tensor product; arities add.
    pub fn tensor(&self, rhs: &UqTensor) -> UqTensor {
        let mut out = UqTensor::zero(self.arity + rhs.arity);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut legs = a.clone();
                legs.extend_from_slice(b);
                out.add_term(legs, &(x * y));
            }
        }
        out
    }

    /// Leg-wise product in the algebra `U^{⊗ arity}`.
    pub fn multiply(&self, rhs: &UqTensor) -> UqTensor {
        assert_eq!(self.arity, rhs.arity, "leg-wise product needs equal arity");
        let mut cache: BTreeMap<(UqMonomial, UqMonomial), UqElement> = BTreeMap::new();
        let mut out = UqTensor::zero(self.arity);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut partial: Vec<(Vec<UqMonomial>, QScalar)> = vec![(Vec::new(), x * y)];
                for (ma, mb) in a.iter().zip(b) {
                    let prod = cache.entry((*ma, *mb)).or_insert_with(|| ma.mul(mb)).clone();
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (legs, c) in &partial {
                        for (m, d) in prod.terms() {
                            let mut l2 = legs.clone();
                            l2.push(*m);
                            next.push((l2, c * d));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (legs, c) in partial {
                    out.add_term(legs, &c);
                }
            }
        }
        out
    }

    /// Replaces leg `k` by the image of a linear map sending a monomial to a tensor.
    pub fn expand_leg<F>(&self, k: usize, mut map: F) -> UqTensor
    where
        F: FnMut(&UqMonomial) -> UqTensor,
    {
        assert!(k < self.arity);
        let mut cache: BTreeMap<UqMonomial, UqTensor> = BTreeMap::new();
        let mut out: Option<UqTensor> = None;
        for (legs, c) in &self.terms {
            let image = cache.entry(legs[k]).or_insert_with(|| map(&legs[k]));
            let target = out.get_or_insert_with(|| UqTensor::zero(self.arity - 1 + image.arity));
            for (mid, d) in &image.terms {
                let mut nl = Vec::with_capacity(target.arity);
                nl.extend_from_slice(&legs[..k]);
                nl.extend_from_slice(mid);
                nl.extend_from_slice(&legs[k + 1..]);
                target.add_term(nl, &(c * d));
            }
        }
        out.unwrap_or_else(|| UqTensor::zero(self.arity))
    }

    /// Applies a scalar-valued functional to leg `k`, dropping that leg.
    pub fn contract_leg<F>(&self, k: usize, mut functional: F) -> UqTensor
    where
        F: FnMut(&UqMonomial) -> QScalar,
    {
        assert!(self.arity >= 2 && k < self.arity);
        let mut out = UqTensor::zero(self.arity - 1);
        for (legs, c) in &self.terms {
            let v = functional(&legs[k]);
            if v.is_zero() {
                continue;
            }
            let mut nl = legs.clone();
            nl.remove(k);
            out.add_term(nl, &(c * &v));
        }
        out
    }

    /// Multiplies all legs together (in order), giving an element of U.
    pub fn multiply_legs(&self) -> UqElement {
        let mut out = UqElement::zero();
        for (legs, c) in &self.terms {
            let mut acc = UqElement::scalar(c.clone());
            for m in legs {
                acc = acc.multiply(&UqElement::monomial(*m));
            }
            out = &out + &acc;
        }
        out
    }

    /// For arity-1 tensors, the underlying element.
    pub fn to_element(&self) -> UqElement {
        assert_eq!(self.arity, 1);
        let mut out = UqElement::zero();
        for (legs, c) in &self.terms {
            out.add_term(legs[0], c);
        }
        out
    }
}

impl fmt::Display for UqTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (legs, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = legs.iter().map(ToString::to_string).collect();
            let mono = format!("({})", mono.join(" ⊗ "));
            write_scaled(f, k == 0, c, &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for UqTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UqTensor[{}]({self})", self.arity)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    legs: Vec<UqMonomial>,
    coeff: QScalar,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    arity: usize,
    terms: Vec<TensorTermJson>,
}

impl Serialize for UqTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TensorJson {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(legs, c)| TensorTermJson {
                    legs: legs.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}
