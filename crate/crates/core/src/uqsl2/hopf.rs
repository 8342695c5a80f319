//! Coproduct, counit and antipode, defined on generators and extended
//! (anti)multiplicatively through the rewriting engine.

use std::collections::HashMap;

use super::{normal_form, Gen, UqElement, UqMonomial, UqTensor};
use crate::qscalar::QScalar;

fn gen_coproduct(g: Gen) -> UqTensor {
    let one = UqElement::one();
    let mono = |l, i, j| UqElement::monomial(UqMonomial::new(l, i, j));
    match g {
        Gen::K => UqTensor::pure(&[mono(1, 0, 0), mono(1, 0, 0)]),
        Gen::KInv => UqTensor::pure(&[mono(-1, 0, 0), mono(-1, 0, 0)]),
        // Δ(E) = 1 ⊗ E + E ⊗ K
        Gen::E => {
            let mut t = UqTensor::pure(&[one.clone(), mono(0, 1, 0)]);
            t.add_scaled(&UqTensor::pure(&[mono(0, 1, 0), mono(1, 0, 0)]), &QScalar::one());
            t
        }
        // Δ(F) = K^-1 ⊗ F + F ⊗ 1
        Gen::F => {
            let mut t = UqTensor::pure(&[mono(-1, 0, 0), mono(0, 0, 1)]);
            t.add_scaled(&UqTensor::pure(&[mono(0, 0, 1), one]), &QScalar::one());
            t
        }
    }
}

/// `Δ(K^l E^i F^j)` as the leg-wise product of the generator coproducts.
pub fn coproduct_monomial(m: &UqMonomial) -> UqTensor {
    let word = m.word();
    let mut acc = UqTensor::pure(&[UqElement::one(), UqElement::one()]);
    let mut images: HashMap<Gen, UqTensor> = HashMap::new();
    for g in word {
        let img = images.entry(g).or_insert_with(|| gen_coproduct(g));
        acc = acc.multiply(img);
    }
    acc
}

pub fn coproduct(u: &UqElement) -> UqTensor {
    let mut out = UqTensor::zero(2);
    for (m, c) in u.terms() {
        out.add_scaled(&coproduct_monomial(m), c);
    }
    out
}

/// Applies Δ to leg `k`, raising the arity by one.
pub fn coproduct_on_leg(t: &UqTensor, k: usize) -> UqTensor {
    t.expand_leg(k, coproduct_monomial)
}

/// `Δ^n = (Id ⊗ Δ^{n-1}) ∘ Δ`, with `Δ^0 = Id`; the result has `n + 1` legs.
pub fn iterated_coproduct(u: &UqElement, n: usize) -> UqTensor {
    let mut cache: HashMap<UqMonomial, UqTensor> = HashMap::new();
    let mut t = UqTensor::from_element(u);
    for _ in 0..n {
        let last = t.arity() - 1;
        t = t.expand_leg(last, |m| {
            cache.entry(*m).or_insert_with(|| coproduct_monomial(m)).clone()
        });
    }
    t
}

pub fn counit_monomial(m: &UqMonomial) -> QScalar {
    if m.i == 0 && m.j == 0 {
        QScalar::one()
    } else {
        QScalar::zero()
    }
}

pub fn counit(u: &UqElement) -> QScalar {
    u.terms()
        .filter(|(m, _)| m.i == 0 && m.j == 0)
        .map(|(_, c)| c.clone())
        .sum()
}

fn gen_antipode(g: Gen) -> (bool, &'static [Gen]) {
    match g {
        Gen::K => (false, &[Gen::KInv]),
        Gen::KInv => (false, &[Gen::K]),
        // S(E) = -E K^-1, S(F) = -K F
        Gen::E => (true, &[Gen::E, Gen::KInv]),
        Gen::F => (true, &[Gen::K, Gen::F]),
    }
}

pub fn antipode_monomial(m: &UqMonomial) -> UqElement {
    let mut negate = false;
    let mut word = Vec::new();
    for g in m.word().into_iter().rev() {
        let (neg, img) = gen_antipode(g);
        negate ^= neg;
        word.extend_from_slice(img);
    }
    let c = if negate { -QScalar::one() } else { QScalar::one() };
    normal_form(&c, &word)
}

pub fn antipode(u: &UqElement) -> UqElement {
    let mut out = UqElement::zero();
    for (m, c) in u.terms() {
        out.add_scaled(&antipode_monomial(m), c);
    }
    out
}
