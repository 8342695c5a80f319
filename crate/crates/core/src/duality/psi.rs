//! The pairing `ψ: SL_q(2) → U_q(sl_2)^*` and its convolution extension to words.

use std::collections::HashMap;

use super::{word_coproduct, GenWord, Letter, WordSum};
use crate::qscalar::{gauss_factorial, QScalar};
use crate::uqsl2::{antipode, counit, iterated_coproduct, primed_monomial, UqElement, UqMonomial};

/// `ψ(x)(K^l E^i F^j)` on the unprimed PBW basis.
pub fn psi_gen_monomial(x: Letter, m: &UqMonomial) -> QScalar {
    let (l, i, j) = (m.l, m.i, m.j);
    match (x, i, j) {
        (Letter::A, 0, 0) | (Letter::A, 1, 1) => QScalar::q_pow(l),
        (Letter::B, 1, 0) => QScalar::q_pow(l),
        (Letter::C, 0, 1) => QScalar::q_pow(-l),
        (Letter::D, 0, 0) => QScalar::q_pow(-l),
        _ => QScalar::zero(),
    }
}

pub fn psi_gen(x: Letter, u: &UqElement) -> QScalar {
    u.terms().map(|(m, c)| c * &psi_gen_monomial(x, m)).sum()
}

/// The same functionals listed on the primed basis `K^l E'^i F^j`. Kept as a
/// separate transcription so it can be checked against [`psi_gen`].
pub fn psi_gen_primed(x: Letter, l: i64, i: u32, j: u32) -> QScalar {
    match (x, i, j) {
        (Letter::A, 0, 0) => QScalar::q_pow(l),
        (Letter::A, 1, 1) => QScalar::q_pow(l - 1),
        (Letter::B, 1, 0) => QScalar::q_pow(l - 1),
        (Letter::C, 0, 1) => QScalar::q_pow(-l),
        (Letter::D, 0, 0) => QScalar::q_pow(-l),
        _ => QScalar::zero(),
    }
}

/// Whether the primed table agrees with the unprimed one after converting
/// `K^l E'^i F^j` to the unprimed basis, for `|l| <= l_max`, `i + j <= max_degree`.
pub fn primed_table_agrees(l_max: i64, max_degree: u32) -> bool {
    (-l_max..=l_max).all(|l| {
        (0..=max_degree).all(|n| {
            (0..=n).all(|i| {
                Letter::ALL
                    .iter()
                    .all(|&x| psi_gen(x, &primed_monomial(l, i, n - i)) == psi_gen_primed(x, l, i, n - i))
            })
        })
    })
}

/// `ψ(x_1 ⋯ x_k)(u) = Σ ψ(x_1)(u_1) ⋯ ψ(x_k)(u_k)`; the empty word gives `ε(u)`.
pub fn psi_letters(letters: &[Letter], u: &UqElement) -> QScalar {
    match letters.len() {
        0 => counit(u),
        1 => psi_gen(letters[0], u),
        k => {
            let t = iterated_coproduct(u, k - 1);
            let mut total = QScalar::zero();
            'terms: for (legs, c) in t.terms() {
                let mut acc = c.clone();
                for (x, m) in letters.iter().zip(legs) {
                    let v = psi_gen_monomial(*x, m);
                    if v.is_zero() {
                        continue 'terms;
                    }
                    acc *= &v;
                }
                total += &acc;
            }
            total
        }
    }
}

pub fn psi_word(w: &GenWord, u: &UqElement) -> QScalar {
    &w.coeff * &psi_letters(&w.letters, u)
}

pub fn psi_sum(w: &WordSum, u: &UqElement) -> QScalar {
    w.terms().map(|(letters, c)| c * &psi_letters(letters, u)).sum()
}

/// The scalar relating `b(l, n, i)` to the image of `K^l E'^i F^j`, `j = n - i`:
/// `b(l, n, i) = q^{i(i+1)} / (i!_{q^2} j!_{q^-2}) · θ(K^l E'^i F^j)`.
pub fn b_normalization(i: u32, j: u32) -> QScalar {
    let denom = gauss_factorial(i, &QScalar::q_pow(2)) * gauss_factorial(j, &QScalar::q_pow(-2));
    QScalar::q_pow(i as i64 * (i as i64 + 1))
        .checked_div(&denom)
        .expect("q-factorials are nonzero")
}

/// Memoized values `ψ(w)(b(l, n, i))` with `b(l, n, i)` identified with an
/// element of U_q(sl_2).
#[derive(Default)]
pub struct PsiEvaluator {
    cache: HashMap<(Vec<Letter>, i64, u32, u32), QScalar>,
}

impl PsiEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn on_basis(&mut self, letters: &[Letter], l: i64, n: u32, i: u32) -> QScalar {
        assert!(i <= n);
        let key = (letters.to_vec(), l, n, i);
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let j = n - i;
        let v = &b_normalization(i, j) * &psi_letters(letters, &primed_monomial(l, i, j));
        self.cache.insert(key, v.clone());
        v
    }
}

/// `ψ(x)(b(l, n, i))` for a single generator.
pub fn psi_on_b(x: Letter, l: i64, n: u32, i: u32) -> QScalar {
    assert!(i <= n);
    &b_normalization(i, n - i) * &psi_gen(x, &primed_monomial(l, i, n - i))
}

/// `ψ(x)(S_U(u)) = φ(u)(S_H(x))` with `φ(u)(y) = ψ(y)(u)`.
pub fn check_duality_antipode(x: &GenWord, u: &UqElement) -> bool {
    let lhs = psi_word(x, &antipode(u));
    let rhs = psi_word(&x.antipode(), u);
    lhs == rhs
}

/// `φ(uv)(x) = Σ φ(u)(x_1) φ(v)(x_2)`, i.e. `φ` is multiplicative when tested
/// on the word `x`.
pub fn check_phi_multiplicative(x: &GenWord, u: &UqElement, v: &UqElement) -> bool {
    let lhs = psi_word(x, &u.multiply(v));
    let rhs: QScalar = word_coproduct(&x.letters)
        .iter()
        .map(|(x1, x2)| psi_letters(x1, u) * psi_letters(x2, v))
        .sum();
    lhs == &x.coeff * &rhs
}
