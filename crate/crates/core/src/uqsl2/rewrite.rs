//! Rewriting of generator words into the PBW basis `K^l E^i F^j`.
//!
//! Rules, applied to an adjacent pair:
//!
//! ```text
//! K K^-1 -> 1            K^-1 K -> 1
//! E K    -> q^-2 K E     E K^-1 -> q^2 K^-1 E
//! F K    -> q^2  K F     F K^-1 -> q^-2 K^-1 F
//! F E    -> E F - (q - q^-1)^-1 K + (q - q^-1)^-1 K^-1
//! ```
//!
//! Every rule either removes two letters or removes one inversion of the
//! order `K^±1 < E < F` without adding letters, so rewriting terminates.

use std::collections::BTreeMap;

use super::{Gen, UqElement, UqMonomial};
use crate::qscalar::QScalar;

/// Which reducible position to rewrite next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Pseudo-random choice driven by a xorshift state.
    Shuffled(u64),
}

impl Strategy {
    fn pick(&mut self, candidates: &[usize]) -> usize {
        match self {
            Strategy::Leftmost => candidates[0],
            Strategy::Rightmost => *candidates.last().unwrap(),
            Strategy::Shuffled(state) => {
                let mut x = *state | 1;
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                *state = x;
                candidates[(x % candidates.len() as u64) as usize]
            }
        }
    }
}

fn reducible(a: Gen, b: Gen) -> bool {
    use Gen::*;
    matches!(
        (a, b),
        (K, KInv) | (KInv, K) | (E, K) | (E, KInv) | (F, K) | (F, KInv) | (F, E)
    )
}

/// The commutator denominator `(q - q^-1)^-1`.
pub(crate) fn commutator_coeff() -> QScalar {
    (&QScalar::q() - &QScalar::q_pow(-1))
        .inv()
        .expect("q - q^-1 is nonzero in Q(q)")
}

fn word_to_monomial(word: &[Gen]) -> UqMonomial {
    let mut m = UqMonomial::new(0, 0, 0);
    for g in word {
        match g {
            Gen::K => m.l += 1,
            Gen::KInv => m.l -= 1,
            Gen::E => m.i += 1,
            Gen::F => m.j += 1,
        }
    }
    m
}

/// Rewrites `coeff * word` with the leftmost strategy.
pub fn normal_form(coeff: &QScalar, word: &[Gen]) -> UqElement {
    normal_form_with(coeff, word, Strategy::Leftmost)
}

pub fn normal_form_with(coeff: &QScalar, word: &[Gen], mut strategy: Strategy) -> UqElement {
    let mut out = UqElement::zero();
    if coeff.is_zero() {
        return out;
    }
    let cinv = commutator_coeff();
    let mut pending: BTreeMap<Vec<Gen>, QScalar> = BTreeMap::new();
    pending.insert(word.to_vec(), coeff.clone());
    let mut candidates = Vec::new();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        candidates.clear();
        candidates.extend((0..w.len().saturating_sub(1)).filter(|&k| reducible(w[k], w[k + 1])));
        if candidates.is_empty() {
            out.add_term(word_to_monomial(&w), &c);
            continue;
        }
        let k = strategy.pick(&candidates);
        let mut push = |replacement: &[Gen], factor: QScalar| {
            let mut nw = Vec::with_capacity(w.len());
            nw.extend_from_slice(&w[..k]);
            nw.extend_from_slice(replacement);
            nw.extend_from_slice(&w[k + 2..]);
            let entry = pending.entry(nw).or_insert_with(QScalar::zero);
            *entry += &factor;
        };
        use Gen::*;
        match (w[k], w[k + 1]) {
            (K, KInv) | (KInv, K) => push(&[], c.clone()),
            (E, K) => push(&[K, E], c.mul_q_pow(-2)),
            (E, KInv) => push(&[KInv, E], c.mul_q_pow(2)),
            (F, K) => push(&[K, F], c.mul_q_pow(2)),
            (F, KInv) => push(&[KInv, F], c.mul_q_pow(-2)),
            (F, E) => {
                push(&[E, F], c.clone());
                let t = &c * &cinv;
                push(&[K], -&t);
                push(&[KInv], t);
            }
            _ => unreachable!("only reducible pairs are candidates"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    #[test]
    fn ordered_word_is_fixed() {
        let x = normal_form(&QScalar::one(), &[E, F]);
        assert_eq!(x, UqElement::monomial(UqMonomial::new(0, 1, 1)));
    }

    #[test]
    fn conjugation_by_k() {
        let x = normal_form(&QScalar::one(), &[K, E, KInv]);
        assert_eq!(
            x,
            UqElement::monomial(UqMonomial::new(0, 1, 0)).scale(&QScalar::q_pow(2))
        );
        let y = normal_form(&QScalar::one(), &[K, F, KInv]);
        assert_eq!(
            y,
            UqElement::monomial(UqMonomial::new(0, 0, 1)).scale(&QScalar::q_pow(-2))
        );
    }

    #[test]
    fn fe_swap() {
        let fe = normal_form(&QScalar::one(), &[F, E]);
        let c = commutator_coeff();
        let mut expected = UqElement::monomial(UqMonomial::new(0, 1, 1));
        expected.add_term(UqMonomial::new(1, 0, 0), &-&c);
        expected.add_term(UqMonomial::new(-1, 0, 0), &c);
        assert_eq!(fe, expected);
        // Oracle: [E,F] recovered from the two orderings.
        let ef = normal_form(&QScalar::one(), &[E, F]);
        let mut commutator = UqElement::monomial(UqMonomial::new(1, 0, 0));
        commutator.add_term(UqMonomial::new(-1, 0, 0), &-QScalar::one());
        assert_eq!(&ef - &fe, commutator.scale(&c));
    }

    #[test]
    fn strategies_agree_on_a_long_word() {
        let w = [F, F, E, KInv, E, K, F, E];
        let left = normal_form_with(&QScalar::one(), &w, Strategy::Leftmost);
        let right = normal_form_with(&QScalar::one(), &w, Strategy::Rightmost);
        let shuffled = normal_form_with(&QScalar::one(), &w, Strategy::Shuffled(7));
        assert_eq!(left, right);
        assert_eq!(left, shuffled);
    }
}
