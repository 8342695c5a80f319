//! The ground field Q(q) and the q-combinatorics built on it.

mod parse;
mod poly;
mod scalar;

pub(crate) use parse::{exponent, scalar_atom, Cursor, Tok};
pub use poly::QPoly;
pub use scalar::QScalar;

use crate::error::{Error, Result};

/// `n_b = 1 + b + ... + b^(n-1)`.
pub fn gauss_integer(n: u32, base: &QScalar) -> QScalar {
    let mut acc = QScalar::zero();
    let mut p = QScalar::one();
    for _ in 0..n {
        acc += &p;
        p = &p * base;
    }
    acc
}

/// `n!_b = 1_b 2_b ... n_b`, with `0!_b = 1`.
pub fn gauss_factorial(n: u32, base: &QScalar) -> QScalar {
    (1..=n).map(|k| gauss_integer(k, base)).product()
}

/// Gaussian binomial `n!_b / (m!_b (n-m)!_b)`.
pub fn gauss_binomial(n: u32, m: u32, base: &QScalar) -> Result<QScalar> {
    if m > n {
        return Err(Error::Precondition(format!(
            "binomial needs m <= n, got n = {n}, m = {m}"
        )));
    }
    let num = gauss_factorial(n, base);
    let den = &gauss_factorial(m, base) * &gauss_factorial(n - m, base);
    num.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(s: &str) -> QScalar {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_examples() {
        let q = QScalar::q();
        let q2 = QScalar::q_pow(2);
        assert_eq!(gauss_factorial(0, &q2), QScalar::one());
        assert_eq!(gauss_factorial(2, &q), qs("1 + q"));
        assert_eq!(gauss_factorial(3, &q2), qs("(1 + q^2)*(1 + q^2 + q^4)"));
    }

    #[test]
    fn binomial_examples() {
        let q = QScalar::q();
        let q2 = QScalar::q_pow(2);
        for n in 0..6 {
            assert_eq!(gauss_binomial(n, 0, &q2).unwrap(), QScalar::one());
        }
        assert_eq!(gauss_binomial(2, 1, &q).unwrap(), qs("1 + q"));
        assert!(matches!(gauss_binomial(1, 2, &q), Err(Error::Precondition(_))));
    }

    #[test]
    fn binomial_four_two_base_q_squared() {
        // Oracle: count 2-subsets of {0,1,2,3} weighted by b^(inversions); with
        // b = q^2 the inversion generating function is 1 + b + 2b^2 + b^3 + b^4.
        let mut weights = std::collections::BTreeMap::<i64, i64>::new();
        for mask in 0u32..16 {
            if mask.count_ones() != 2 {
                continue;
            }
            // inversions of the 0/1 word: pairs (1 before 0)
            let bits: Vec<u32> = (0..4).map(|k| (mask >> k) & 1).collect();
            let mut inv = 0;
            for x in 0..4 {
                for y in x + 1..4 {
                    if bits[x] == 1 && bits[y] == 0 {
                        inv += 1;
                    }
                }
            }
            *weights.entry(2 * inv).or_default() += 1;
        }
        let oracle = QScalar::from_poly(QPoly::from_terms(
            weights
                .into_iter()
                .map(|(e, c)| (e, num_rational::BigRational::from_integer(c.into()))),
        ));
        let b = gauss_binomial(4, 2, &QScalar::q_pow(2)).unwrap();
        assert_eq!(b, oracle);
        assert_eq!(b, qs("(1 + q^4)*(1 + q^2 + q^4)"));
        assert!(b.is_laurent());
    }

    #[test]
    fn negative_base_is_laurent() {
        let b = gauss_binomial(5, 2, &QScalar::q_pow(-2)).unwrap();
        assert!(b.is_laurent());
    }
}
