use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Path;
use crate::qscalar::QScalar;
use crate::uqsl2::write_scaled;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, QScalar>, key: K, c: &QScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// A finite linear combination of paths.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PathVector {
    terms: BTreeMap<Path, QScalar>,
}

impl PathVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn path(p: Path) -> Self {
        Self::term(p, QScalar::one())
    }

    pub fn term(p: Path, c: QScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(p, &c);
        out
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

    pub fn coeff(&self, p: &Path) -> QScalar {
        self.terms.get(p).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &QScalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, p: Path, c: &QScalar) {
        accumulate(&mut self.terms, p, c);
    }

    pub fn add_scaled(&mut self, other: &PathVector, c: &QScalar) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &QScalar) -> PathVector {
        let mut out = PathVector::zero();
        out.add_scaled(self, c);
        out
    }
}

impl Add for &PathVector {
    type Output = PathVector;
    fn add(self, rhs: &PathVector) -> PathVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &QScalar::one());
        out
    }
}

impl Sub for &PathVector {
    type Output = PathVector;
    fn sub(self, rhs: &PathVector) -> PathVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &-QScalar::one());
        out
    }
}

impl Neg for &PathVector {
    type Output = PathVector;
    fn neg(self) -> PathVector {
        self.scale(&-QScalar::one())
    }
}

/// E.g. `q^2*<0:[+,-]> + q^4*<0:[-,+]>`, terms in path order.
impl fmt::Display for PathVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            write_scaled(f, k == 0, c, &format!("<{p}>"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathVector({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    path: String,
    coeff: QScalar,
}

#[derive(Serialize, Deserialize)]
struct VectorJson {
    terms: Vec<TermJson>,
}

impl Serialize for PathVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VectorJson {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    path: p.to_string(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = VectorJson::deserialize(d)?;
        let mut out = PathVector::zero();
        for t in raw.terms {
            let p: Path = t.path.parse().map_err(D::Error::custom)?;
            out.add_term(p, &t.coeff);
        }
        Ok(out)
    }
}

/// A finite sum of pure tensors of paths with a fixed number of legs.
#[derive(Clone, PartialEq, Eq)]
pub struct PathTensor {
    arity: usize,
    terms: BTreeMap<Vec<Path>, QScalar>,
}

impl PathTensor {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        PathTensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_vector(x: &PathVector) -> Self {
        let mut out = Self::zero(1);
        for (p, c) in x.terms() {
            out.add_term(vec![p.clone()], c);
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Path>, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, legs: &[Path]) -> QScalar {
        self.terms.get(legs).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn add_term(&mut self, legs: Vec<Path>, c: &QScalar) {
        assert_eq!(legs.len(), self.arity, "leg count must match arity");
        accumulate(&mut self.terms, legs, c);
    }

    pub fn add_scaled(&mut self, other: &PathTensor, c: &QScalar) {
        assert_eq!(self.arity, other.arity);
        for (legs, x) in &other.terms {
            self.add_term(legs.clone(), &(x * c));
        }
    }

    pub fn sub(&self, other: &PathTensor) -> PathTensor {
        let mut out = self.clone();
        out.add_scaled(other, &-QScalar::one());
        out
    }

    /// `x ⊗ y` for vectors, appended as two new legs.
    pub fn pair(x: &PathVector, y: &PathVector) -> PathTensor {
        let mut out = PathTensor::zero(2);
        for (p, a) in x.terms() {
            for (r, b) in y.terms() {
                out.add_term(vec![p.clone(), r.clone()], &(a * b));
            }
        }
        out
    }

    /// Replaces leg `k` by the legs of `map(path)`.
    pub fn expand_leg<F>(&self, k: usize, mut map: F) -> PathTensor
    where
        F: FnMut(&Path) -> PathTensor,
    {
        assert!(k < self.arity);
        let mut out: Option<PathTensor> = None;
        for (legs, c) in &self.terms {
            let img = map(&legs[k]);
            let acc = out.get_or_insert_with(|| PathTensor::zero(self.arity - 1 + img.arity));
            for (inner, x) in &img.terms {
                let mut new_legs = Vec::with_capacity(acc.arity);
                new_legs.extend_from_slice(&legs[..k]);
                new_legs.extend(inner.iter().cloned());
                new_legs.extend_from_slice(&legs[k + 1..]);
                acc.add_term(new_legs, &(c * x));
            }
        }
        out.unwrap_or_else(|| PathTensor::zero(self.arity + 1))
    }

    /// Applies a scalar functional to leg `k`, lowering the arity by one.
    pub fn contract_leg<F>(&self, k: usize, mut functional: F) -> PathTensor
    where
        F: FnMut(&Path) -> QScalar,
    {
        assert!(k < self.arity && self.arity >= 2);
        let mut out = PathTensor::zero(self.arity - 1);
        for (legs, c) in &self.terms {
            let v = functional(&legs[k]);
            if v.is_zero() {
                continue;
            }
            let mut rest = legs.clone();
            rest.remove(k);
            out.add_term(rest, &(c * &v));
        }
        out
    }

    /// Collapses a one-leg tensor back to a vector.
    pub fn to_vector(&self) -> PathVector {
        assert_eq!(self.arity, 1);
        let mut out = PathVector::zero();
        for (legs, c) in &self.terms {
            out.add_term(legs[0].clone(), c);
        }
        out
    }
}

impl fmt::Display for PathTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (legs, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = legs.iter().map(|p| format!("<{p}>")).collect();
            write_scaled(f, k == 0, c, &format!("({})", mono.join(" ⊗ ")))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathTensor[{}]({self})", self.arity)
    }
}

/// Deconcatenation of a single path: `Σ_{βα = p} β ⊗ α`.
pub fn path_delta_path(p: &Path) -> PathTensor {
    let mut out = PathTensor::zero(2);
    for k in 0..=p.len() {
        let (beta, alpha) = p.split_at(k);
        out.add_term(vec![beta, alpha], &QScalar::one());
    }
    out
}

pub fn path_delta(x: &PathVector) -> PathTensor {
    let mut out = PathTensor::zero(2);
    for (p, c) in x.terms() {
        out.add_scaled(&path_delta_path(p), c);
    }
    out
}

/// `ε(e_l) = 1`, zero on paths of positive length.
pub fn path_counit_path(p: &Path) -> QScalar {
    if p.is_vertex() {
        QScalar::one()
    } else {
        QScalar::zero()
    }
}

pub fn path_counit(x: &PathVector) -> QScalar {
    x.terms().filter(|(p, _)| p.is_vertex()).map(|(_, c)| c.clone()).sum()
}
