//! The weights `χ(v)`, the basis vectors `b(l, n, i)` and the graded
//! coalgebra map `θ: U_q(sl_2) → kD^c`.

use std::collections::BTreeMap;

use super::{Path, PathTensor, PathVector, Sign, SignVector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qscalar::{gauss_factorial, QScalar};
use crate::uqsl2::{iterated_coproduct, primed_monomial, UqElement, UqMonomial, UqTensor};

/// `χ(v) = q^{2 Σ_{t ∈ T_v} t}`, which is 1 when no sign is positive.
pub fn chi(v: &SignVector) -> QScalar {
    let exp: usize = v.plus_positions().sum();
    QScalar::q_pow(2 * exp as i64)
}

/// `b(l, n, i) = Σ_{|v| = n, |T_v| = i} χ(v) P_l^{(v)}`.
pub fn basis_b(l: i64, n: usize, i: usize) -> Result<PathVector> {
    if i > n {
        return Err(Error::Precondition(format!(
            "b(l, n, i) needs i <= n, got n = {n}, i = {i}"
        )));
    }
    let mut out = PathVector::zero();
    for v in SignVector::with_plus_count(n, i) {
        let c = chi(&v);
        out.add_term(Path::new(l, v), &c);
    }
    Ok(out)
}

/// Projection onto the degree-one part: `K^{l-1}E ↦ P_l^{(1)}`, `K^l F ↦ P_l^{(-1)}`.
fn project(m: &UqMonomial) -> Option<Path> {
    match (m.i, m.j) {
        (1, 0) => Some(Path::arrow(m.l + 1, Sign::Plus)),
        (0, 1) => Some(Path::arrow(m.l, Sign::Minus)),
        _ => None,
    }
}

/// `θ` on a PBW monomial of degree `n = i + j`: `π^{⊗n} ∘ Δ^{n-1}` for
/// `n >= 2`, and the identification of group-likes and arrows otherwise.
pub fn theta_monomial(m: &UqMonomial) -> PathVector {
    let n = m.degree() as usize;
    match n {
        0 => PathVector::path(Path::vertex(m.l)),
        1 => PathVector::path(project(m).expect("degree one")),
        _ => {
            let t = iterated_coproduct(&UqElement::monomial(*m), n - 1);
            let mut out = PathVector::zero();
            'terms: for (legs, c) in t.terms() {
                // The rightmost leg is the first arrow traversed.
                let mut signs = Vec::with_capacity(n);
                let mut at: Option<i64> = None;
                let mut start = 0;
                for leg in legs.iter().rev() {
                    let Some(arrow) = project(leg) else {
                        continue 'terms;
                    };
                    match at {
                        None => start = arrow.start,
                        Some(v) => assert_eq!(v, arrow.start, "legs of Δ^(n-1) must compose"),
                    }
                    at = Some(arrow.end());
                    signs.push(arrow.v.signs()[0]);
                }
                out.add_term(Path::new(start, SignVector::new(signs)), c);
            }
            out
        }
    }
}

pub fn theta(u: &UqElement) -> PathVector {
    let mut out = PathVector::zero();
    for (m, c) in u.terms() {
        out.add_scaled(&theta_monomial(m), c);
    }
    out
}

/// `θ^{⊗k}` applied leg by leg.
pub fn theta_tensor(t: &UqTensor) -> PathTensor {
    let mut images: BTreeMap<UqMonomial, PathVector> = BTreeMap::new();
    let mut out = PathTensor::zero(t.arity());
    for (legs, c) in t.terms() {
        let mut partial: Vec<(Vec<Path>, QScalar)> = vec![(Vec::new(), c.clone())];
        for m in legs {
            let img = images.entry(*m).or_insert_with(|| theta_monomial(m));
            let mut next = Vec::with_capacity(partial.len() * img.len());
            for (prefix, x) in &partial {
                for (p, y) in img.terms() {
                    let mut legs = prefix.clone();
                    legs.push(p.clone());
                    next.push((legs, x * y));
                }
            }
            partial = next;
        }
        for (legs, x) in partial {
            out.add_term(legs, &x);
        }
    }
    out
}

/// Both sides of `θ(K^l E'^i F^j) = i!_{q^2} j!_{q^-2} q^{-i(i+1)} b(l, i + j, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: PathVector,
    pub rhs: PathVector,
    /// `lhs - rhs`; empty exactly when the identity holds.
    pub diff: PathVector,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.diff.is_zero()
    }
}

/// The closed-form image `i!_{q^2} j!_{q^-2} q^{-i(i+1)} b(l, i + j, i)`.
pub fn theta_closed_form(l: i64, i: u32, j: u32) -> PathVector {
    let c = gauss_factorial(i, &QScalar::q_pow(2))
        * gauss_factorial(j, &QScalar::q_pow(-2))
        * QScalar::q_pow(-(i as i64) * (i as i64 + 1));
    basis_b(l, (i + j) as usize, i as usize).expect("i <= i + j").scale(&c)
}

pub fn verify_identity_31(l: i64, i: u32, j: u32) -> IdentityCheck {
    let lhs = theta(&primed_monomial(l, i, j));
    let rhs = theta_closed_form(l, i, j);
    let diff = &lhs - &rhs;
    IdentityCheck { lhs, rhs, diff }
}

/// Index of a basis vector `b(l, n, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BIndex {
    pub l: i64,
    pub n: usize,
    pub i: usize,
}

impl BIndex {
    fn of(p: &Path) -> BIndex {
        BIndex {
            l: p.start,
            n: p.len(),
            i: p.v.plus_count(),
        }
    }
}

/// Rewrites a two-leg path tensor as `Σ c · b ⊗ b'`, or `None` when it lies
/// outside `span{b ⊗ b'}`. Each block of paths with fixed endpoints and
/// plus-counts is solved as an exact linear system.
pub fn express_in_b_basis(t: &PathTensor) -> Option<BTreeMap<(BIndex, BIndex), QScalar>> {
    assert_eq!(t.arity(), 2, "expected a two-leg tensor");
    type Block<'a> = Vec<(&'a Vec<Path>, &'a QScalar)>;
    let mut blocks: BTreeMap<(BIndex, BIndex), Block> = BTreeMap::new();
    for (legs, c) in t.terms() {
        blocks
            .entry((BIndex::of(&legs[0]), BIndex::of(&legs[1])))
            .or_default()
            .push((legs, c));
    }
    let mut out = BTreeMap::new();
    for ((x, y), entries) in blocks {
        let bx = basis_b(x.l, x.n, x.i).expect("plus count bounded by length");
        let by = basis_b(y.l, y.n, y.i).expect("plus count bounded by length");
        let candidate = PathTensor::pair(&bx, &by);
        // Rows: every path pair seen in the block or in the candidate.
        let mut rows: BTreeMap<Vec<Path>, usize> = BTreeMap::new();
        for (legs, _) in candidate.terms() {
            let next = rows.len();
            rows.entry(legs.clone()).or_insert(next);
        }
        for (legs, _) in &entries {
            let next = rows.len();
            rows.entry((*legs).clone()).or_insert(next);
        }
        let mut a = Matrix::zeros(rows.len(), 1);
        for (legs, c) in candidate.terms() {
            a[(rows[legs], 0)] = c.clone();
        }
        let mut rhs = vec![QScalar::zero(); rows.len()];
        for (legs, c) in entries {
            rhs[rows[legs]] = c.clone();
        }
        let sol = a.solve(&rhs).expect("shapes agree")?;
        out.insert((x, y), sol[0].clone());
    }
    Some(out)
}
