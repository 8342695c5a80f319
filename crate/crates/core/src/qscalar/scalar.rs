use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, QPoly};
use crate::error::{Error, Result};

/// An element of the rational-function field Q(q), always in canonical form.
///
/// Canonical form: `den` is a monic polynomial with nonzero constant term,
/// `gcd(num, den) = 1` in Q[q], and any power of `q` lives in `num`. Two
/// values are equal iff their fields are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: QPoly,
    den: QPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::from_poly(QPoly::q_pow(exp))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QPoly::constant(poly::integer(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// Laurent polynomials are already canonical with denominator 1.
    pub fn from_poly(num: QPoly) -> Self {
        QScalar { num, den: QPoly::one() }
    }

    pub fn from_fraction(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        // Move the Laurent unit of den into num.
        let num = num.shift(-den.low());
        let den = den.shift(-den.low());
        if den.is_monomial() {
            let inv = den.leading_coeff().unwrap().recip();
            return Self::from_poly(num.scale(&inv));
        }
        let (nlow, ncoeffs) = num.into_dense();
        let (_, dcoeffs) = den.into_dense();
        let g = poly::gcd(&ncoeffs, &dcoeffs);
        let (mut ncoeffs, mut dcoeffs) = if g.len() > 1 {
            (poly::div_rem(&ncoeffs, &g).0, poly::div_rem(&dcoeffs, &g).0)
        } else {
            (ncoeffs, dcoeffs)
        };
        let lc = dcoeffs.last().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for c in ncoeffs.iter_mut().chain(dcoeffs.iter_mut()) {
                *c *= &inv;
            }
        }
        QScalar {
            num: QPoly::from_dense(nlow, ncoeffs),
            den: QPoly::from_dense(0, dcoeffs),
        }
    }

    /// Re-runs canonicalization; the identity on every constructed value.
    pub fn recanonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// `Some(e)` when the value is exactly `q^e`.
    pub fn as_q_power(&self) -> Option<i64> {
        (self.is_laurent() && self.num.is_monomial() && self.num.leading_coeff()?.is_one()).then(|| self.num.low())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QScalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut acc = QScalar::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplication by `q^k`, which never needs a gcd.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        QScalar {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let one = BigRational::one();
        if q0.is_zero() || q0 == &one || q0 == &-one {
            return Err(Error::ForbiddenSpecialization(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }

    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::one()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::from_int(n)
    }
}

impl From<QPoly> for QScalar {
    fn from(p: QPoly) -> Self {
        QScalar::from_poly(p)
    }
}

impl Add for &QScalar {
    type Output = QScalar;

    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QScalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QScalar::canonical(num, &self.den * &rhs.den)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;

    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &QScalar {
    type Output = QScalar;

    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;

    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_poly(&self.num * &rhs.num);
        }
        QScalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for QScalar {
    type Output = QScalar;

    fn neg(self) -> QScalar {
        -&self
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = &*self * rhs;
    }
}

impl Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

impl Product for QScalar {
    fn product<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::one(), |acc, x| acc * x)
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, c: &BigRational, exp: i64) -> fmt::Result {
    // `c` is nonnegative here; the sign is printed by the caller.
    let qpart = match exp {
        0 => None,
        1 => Some("q".to_string()),
        e => Some(format!("q^{e}")),
    };
    match (c.is_one(), c.is_integer(), qpart) {
        (true, _, None) => write!(f, "1"),
        (true, _, Some(qp)) => write!(f, "{qp}"),
        (false, true, None) => write!(f, "{}", c.numer()),
        (false, true, Some(qp)) => write!(f, "{}*{qp}", c.numer()),
        (false, false, None) => write!(f, "({}/{})", c.numer(), c.denom()),
        (false, false, Some(qp)) => write!(f, "({}/{})*{qp}", c.numer(), c.denom()),
    }
}

fn write_sum(f: &mut fmt::Formatter<'_>, p: &QPoly) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        write_coeff_term(f, &c.abs(), e)?;
    }
    Ok(())
}

/// Terms in descending exponent order, e.g. `(q + q^-1)/(q^2 - 1)`.
impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write_sum(f, &self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "(")?;
            write_sum(f, &self.num)?;
            write!(f, ")")?;
        } else {
            write_sum(f, &self.num)?;
        }
        write!(f, "/(")?;
        write_sum(f, &self.den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

impl FromStr for QScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_qscalar(s)
    }
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(n) => Ok(QScalar::from_int(n)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
