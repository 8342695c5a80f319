//! The primed basis `K^l E'^i F^j` with `E' = K^-1 E`, and the closed-form
//! expansion of its iterated coproduct as a sum over pairs of weakly
//! decreasing profiles `(s, r)`.

use super::{UqElement, UqMonomial, UqTensor};
use crate::error::{Error, Result};
use crate::qscalar::{gauss_binomial, QScalar};

/// Two weakly decreasing profiles of equal length `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SRProfile {
    s: Vec<u32>,
    r: Vec<u32>,
}

impl SRProfile {
    pub fn new(s: Vec<u32>, r: Vec<u32>) -> Result<Self> {
        if s.is_empty() || s.len() != r.len() {
            return Err(Error::Precondition("profiles must have equal positive length".into()));
        }
        let decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&s) || !decreasing(&r) {
            return Err(Error::Precondition("profiles must be weakly decreasing".into()));
        }
        Ok(SRProfile { s, r })
    }

    pub fn s(&self) -> &[u32] {
        &self.s
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Π C(s_{t-1}, s_t)_{q^2} · Π C(r_{t-1}, r_t)_{q^-2} · q^{2 Σ_{t≥1} r_t (s_{t-1} - s_t)}`.
    pub fn coefficient(&self) -> QScalar {
        let q2 = QScalar::q_pow(2);
        let qm2 = QScalar::q_pow(-2);
        let mut c = QScalar::one();
        let mut exp = 0i64;
        for t in 1..self.s.len() {
            c *= &gauss_binomial(self.s[t - 1], self.s[t], &q2).expect("profile is decreasing");
            c *= &gauss_binomial(self.r[t - 1], self.r[t], &qm2).expect("profile is decreasing");
            exp += 2 * self.r[t] as i64 * (self.s[t - 1] - self.s[t]) as i64;
        }
        c.mul_q_pow(exp)
    }
}

/// All weakly decreasing sequences of length `n` starting at `top`.
fn decreasing_sequences(top: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![top];
    fn rec(cur: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().unwrap();
        for next in (0..=last).rev() {
            cur.push(next);
            rec(cur, n, out);
            cur.pop();
        }
    }
    rec(&mut cur, n, &mut out);
    out
}

/// All profiles of length `n` with `s_0 = i`, `r_0 = j`.
pub fn profiles(i: u32, j: u32, n: usize) -> Vec<SRProfile> {
    let ss = decreasing_sequences(i, n);
    let rs = decreasing_sequences(j, n);
    let mut out = Vec::with_capacity(ss.len() * rs.len());
    for s in &ss {
        for r in &rs {
            out.push(SRProfile {
                s: s.clone(),
                r: r.clone(),
            });
        }
    }
    out
}

/// `K^l E'^i F^j` in the unprimed basis: `q^{i(i-1)} K^{l-i} E^i F^j`.
pub fn primed_monomial(l: i64, i: u32, j: u32) -> UqElement {
    let twist = i as i64 * (i as i64 - 1);
    UqElement::term(UqMonomial::new(l - i as i64, i, j), QScalar::q_pow(twist))
}

/// The closed-form `Δ^{n-1}(K^l E'^i F^j)` with `n = i + j` legs.
pub fn delta_closed_form(l: i64, i: u32, j: u32) -> Result<UqTensor> {
    if i + j == 0 {
        return Err(Error::Precondition("closed form needs i + j >= 1".into()));
    }
    Ok(delta_closed_form_with_arity(l, i, j, (i + j) as usize))
}

/// The same sum with an arbitrary number of legs `n >= 1`.
pub fn delta_closed_form_with_arity(l: i64, i: u32, j: u32, n: usize) -> UqTensor {
    assert!(n >= 1, "arity must be positive");
    let mut out = UqTensor::zero(n);
    for p in profiles(i, j, n) {
        let (s, r) = (p.s(), p.r());
        let mut coeff = p.coefficient();
        let mut legs = Vec::with_capacity(n);
        for t in 1..n {
            let k = l - s[t] as i64 - r[t] as i64;
            let leg = primed_monomial(k, s[t - 1] - s[t], r[t - 1] - r[t]);
            let (m, c) = leg.terms().next().expect("primed monomial is a single term");
            coeff *= c;
            legs.push(*m);
        }
        let last = primed_monomial(l, s[n - 1], r[n - 1]);
        let (m, c) = last.terms().next().expect("primed monomial is a single term");
        coeff *= c;
        legs.push(*m);
        out.add_term(legs, &coeff);
    }
    out
}
