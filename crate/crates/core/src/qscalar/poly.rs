//! Laurent polynomials in `q` with exact rational coefficients.
//!
//! Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. A nonzero
//! polynomial never has a zero first or last coefficient, and the zero
//! polynomial is the empty vector with `low == 0`, so derived equality is
//! structural equality of the mathematical object.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        QPoly {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent carrying a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        // Horner on the polynomial part, then the Laurent shift.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc * pow_rational(q0, self.low)
    }

    /// Dense ascending coefficients of the polynomial `q^(-low) * self`.
    pub(crate) fn into_dense(self) -> (i64, Vec<BigRational>) {
        (self.low, self.coeffs)
    }
}

pub(crate) fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    match e.cmp(&0) {
        Ordering::Equal => BigRational::one(),
        Ordering::Greater => num_traits::pow(x.clone(), e as usize),
        Ordering::Less => num_traits::pow(x.recip(), (-e) as usize),
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for p in [self, rhs] {
            let off = (p.low - low) as usize;
            for (k, c) in p.coeffs.iter().enumerate() {
                coeffs[off + k] += c;
            }
        }
        QPoly::from_dense(low, coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[a + b] += x * y;
                }
            }
        }
        QPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

// Dense ordinary polynomials (ascending coefficients, no trailing zeros).

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Euclidean division `a = quot * b + rem` with `deg rem < deg b`.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Vec<BigRational> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (t, bt) in b.iter().enumerate() {
            if !bt.is_zero() {
                rem[k + t] -= &c * bt;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Monic gcd of two dense polynomials, at least one nonzero.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(x)
}

pub(crate) fn make_monic(mut v: Vec<BigRational>) -> Vec<BigRational> {
    if let Some(lc) = v.last().cloned() {
        if !lc.is_one() {
            let inv = lc.recip();
            for c in v.iter_mut() {
                *c *= &inv;
            }
        }
    }
    v
}

pub(crate) fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, integer(c))))
    }

    #[test]
    fn trims_on_construction() {
        let x = p(&[(-2, 0), (1, 3), (4, 0)]);
        assert_eq!(x.low(), 1);
        assert_eq!(x.high(), 1);
        assert_eq!(x, QPoly::monomial(integer(3), 1));
        assert_eq!(p(&[(3, 1), (3, -1)]), QPoly::zero());
    }

    #[test]
    fn laurent_product_and_sum() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
        assert_eq!(&(&a + &b), &p(&[(1, 2)]));
    }

    #[test]
    fn division_and_gcd() {
        // q^2 - 1 = (q - 1)(q + 1)
        let a = vec![integer(-1), integer(0), integer(1)];
        let b = vec![integer(-1), integer(1)];
        let (quot, rem) = div_rem(&a, &b);
        assert_eq!(quot, vec![integer(1), integer(1)]);
        assert!(rem.is_empty());
        let g = gcd(&a, &[integer(2), integer(2)]);
        assert_eq!(g, vec![integer(1), integer(1)]);
    }

    #[test]
    fn evaluates_negative_exponents() {
        let x = p(&[(-1, 2), (2, 1)]);
        assert_eq!(x.eval(&integer(2)), integer(5));
    }
}
