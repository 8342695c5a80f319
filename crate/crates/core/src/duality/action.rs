//! The SL_q(2)-module structure `x.m = Σ ψ(x)(m_1) m_0` on a representation.

use serde::Serialize;

use super::{Letter, PsiEvaluator, RelationSet, WordSum};
use crate::error::{Error, Result};
use crate::pathcoalg::{chi, Path, SignVector};
use crate::qscalar::QScalar;
use crate::quiverrep::{QuiverRep, RepElement};

/// Coefficients `f_l^{(v)}(m) / χ(v)` of `ρ(m)` against `b(l, n, i)`, with `v`
/// the first sign vector of its class. With `strict`, every other `v` of the
/// class must give the same normalized value.
fn b_coordinates(rep: &QuiverRep, l: i64, m: &[QScalar], strict: bool) -> Result<Vec<(u32, u32, Vec<QScalar>)>> {
    let mut out = Vec::new();
    let reach = (l - rep.start()).max(0) as usize;
    for n in 0..=reach {
        for i in 0..=n {
            let class = SignVector::with_plus_count(n, i);
            let v0 = &class[0];
            let w0 = rep.path_map(&Path::new(l, v0.clone())).apply(m)?;
            let inv = chi(v0).inv().expect("χ is a power of q");
            let coords: Vec<QScalar> = w0.iter().map(|x| x * &inv).collect();
            if strict {
                for v in &class[1..] {
                    let w = rep.path_map(&Path::new(l, v.clone())).apply(m)?;
                    let c = chi(v);
                    if w.iter().zip(&coords).any(|(a, b)| *a != b * &c) {
                        return Err(Error::Validation(format!(
                            "coaction at vertex {l} leaves the image of U_q(sl_2) (length {n}, {i} upper arrows)"
                        )));
                    }
                }
            }
            if coords.iter().any(|x| !x.is_zero()) {
                out.push((n as u32, i as u32, coords));
            }
        }
    }
    Ok(out)
}

fn act_generic(
    eval: &mut PsiEvaluator,
    w: &WordSum,
    rep: &QuiverRep,
    m: &RepElement,
    strict: bool,
) -> Result<RepElement> {
    let mut out = RepElement::zero();
    for (&l, v) in m.components() {
        for (n, i, coords) in b_coordinates(rep, l, v, strict)? {
            let mut s = QScalar::zero();
            for (letters, c) in w.terms() {
                s += &(c * &eval.on_basis(letters, l, n, i));
            }
            if !s.is_zero() {
                let scaled: Vec<QScalar> = coords.iter().map(|x| x * &s).collect();
                out.add_component(l - n as i64, &scaled);
            }
        }
    }
    Ok(out)
}

/// `w.m` computed from the coaction and the pairing; letters act right to left.
pub fn act_word(w: &WordSum, rep: &QuiverRep, m: &RepElement) -> Result<RepElement> {
    act_word_with(&mut PsiEvaluator::new(), w, rep, m)
}

/// [`act_word`] sharing a cache of pairing values across calls.
pub fn act_word_with(eval: &mut PsiEvaluator, w: &WordSum, rep: &QuiverRep, m: &RepElement) -> Result<RepElement> {
    rep.require_valid()?;
    rep.check_element(m)?;
    act_generic(eval, w, rep, m, true)
}

fn act_letter_closed(x: Letter, rep: &QuiverRep, m: &RepElement) -> RepElement {
    let mut out = RepElement::zero();
    for (&l, v) in m.components() {
        let apply = |p: &str| {
            let p: Path = format!("{l}:[{p}]").parse().expect("static path");
            rep.path_map(&p).apply(v).expect("element fits rep")
        };
        let scaled = |w: &[QScalar], e: i64| -> Vec<QScalar> { w.iter().map(|x| x.mul_q_pow(e)).collect() };
        match x {
            Letter::A => {
                out.add_component(l, &scaled(v, l));
                out.add_component(l - 2, &scaled(&apply("+,-"), l - 1));
            }
            Letter::B => out.add_component(l - 1, &scaled(&apply("+"), l - 1)),
            Letter::C => out.add_component(l - 1, &scaled(&apply("-"), -l)),
            Letter::D => out.add_component(l, &scaled(v, -l)),
        }
    }
    out
}

fn act_closed_unchecked(w: &WordSum, rep: &QuiverRep, m: &RepElement) -> RepElement {
    let mut out = RepElement::zero();
    for (letters, c) in w.terms() {
        let mut cur = m.clone();
        for &x in letters.iter().rev() {
            cur = act_letter_closed(x, rep, &cur);
        }
        out.add_scaled(&cur, c);
    }
    out
}

/// The explicit actions
/// `a.m = q^l m + q^{l-1} f^{(1,-1)}(m)`, `b.m = q^{l-1} f^{(1)}(m)`,
/// `c.m = q^{-l} f^{(-1)}(m)`, `d.m = q^{-l} m` for `m ∈ V_l`.
pub fn act_closed(x: Letter, rep: &QuiverRep, m: &RepElement) -> Result<RepElement> {
    rep.require_valid()?;
    rep.check_element(m)?;
    Ok(act_letter_closed(x, rep, m))
}

/// Closed-form action of a whole combination of words.
pub fn act_closed_word(w: &WordSum, rep: &QuiverRep, m: &RepElement) -> Result<RepElement> {
    rep.require_valid()?;
    rep.check_element(m)?;
    Ok(act_closed_unchecked(w, rep, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionMode {
    /// Through the coaction and the pairing.
    Generic,
    /// Through the explicit formulas for `a, b, c, d`.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisRef {
    pub vertex: i64,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationOutcome {
    pub relation: &'static str,
    pub holds: bool,
    pub violations: Vec<BasisRef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub mode: ActionMode,
    /// Whether the representation satisfies the compatibility condition.
    pub rep_valid: bool,
    pub relations: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Generic action of each word computed one letter at a time, right to left.
/// `ψ` of a relation vanishes identically, so pairing a relation in one step
/// could never detect a bad representation; composing single letters can.
fn act_composed(eval: &mut PsiEvaluator, w: &WordSum, rep: &QuiverRep, m: &RepElement) -> RepElement {
    let mut out = RepElement::zero();
    for (letters, c) in w.terms() {
        let mut cur = m.clone();
        for &x in letters.iter().rev() {
            cur = act_generic(eval, &WordSum::letters(&[x]), rep, &cur, false).expect("basis vectors fit");
        }
        out.add_scaled(&cur, c);
    }
    out
}

/// Applies every defining relation to every basis vector, composing the
/// single-letter actions. The formulas are evaluated even for
/// representations that fail the compatibility condition (normalizing by one
/// fixed sign vector per class), so that such inputs show up as relation
/// failures rather than errors.
pub fn check_slq2_relations(rep: &QuiverRep, mode: ActionMode) -> RelationReport {
    check_slq2_relations_with(&mut PsiEvaluator::new(), rep, mode)
}

pub fn check_slq2_relations_with(eval: &mut PsiEvaluator, rep: &QuiverRep, mode: ActionMode) -> RelationReport {
    let rels = RelationSet::slq2();
    let basis = rep.basis();
    let mut relations = Vec::with_capacity(rels.len());
    for (name, r) in rels.iter() {
        let mut violations = Vec::new();
        for m in &basis {
            let image = match mode {
                ActionMode::Generic => act_composed(eval, r, rep, m),
                ActionMode::ClosedForm => act_closed_unchecked(r, rep, m),
            };
            if !image.is_zero() {
                let (&vertex, v) = m.components().next().expect("basis vector is nonzero");
                let index = v.iter().position(|x| x.is_one()).expect("standard basis vector");
                violations.push(BasisRef { vertex, index });
            }
        }
        relations.push(RelationOutcome {
            relation: name,
            holds: violations.is_empty(),
            violations,
        });
    }
    RelationReport {
        mode,
        rep_valid: rep.validate().condition_i_ok,
        relations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::quiverrep::{schurian_rep, Lambda};

    fn w(s: &str) -> WordSum {
        s.parse().unwrap()
    }

    #[test]
    fn d_scales_by_vertex() {
        let rep = schurian_rep(0, 2, &Lambda::Finite(QScalar::one()));
        for (k, m) in rep.basis().into_iter().enumerate() {
            let l = k as i64;
            assert_eq!(act_word(&w("d"), &rep, &m).unwrap(), m.scale(&QScalar::q_pow(-l)));
            assert_eq!(act_word(&w(""), &rep, &m).unwrap(), m);
        }
    }

    #[test]
    fn relation_annihilates_by_parts() {
        let rep = schurian_rep(-1, 3, &Lambda::Finite(QScalar::q()));
        for m in rep.basis() {
            let da = act_word(&w("d*a"), &rep, &m).unwrap();
            let bc = act_word(&w("b*c"), &rep, &m).unwrap();
            let combined = da.sub(&bc.scale(&QScalar::q())).sub(&m);
            assert!(combined.is_zero());
            assert!(act_word(&w("d*a - q*b*c - 1"), &rep, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn zero_arrows_kill_b() {
        let rep = schurian_rep(0, 2, &Lambda::Infinity);
        for m in rep.basis() {
            assert!(act_word(&w("b"), &rep, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn generic_matches_closed_form() {
        for lambda in ["0", "q^3", "inf"] {
            let rep = schurian_rep(1, 3, &lambda.parse().unwrap());
            for m in rep.basis() {
                for x in Letter::ALL {
                    let word = WordSum::letters(&[x]);
                    assert_eq!(act_word(&word, &rep, &m).unwrap(), act_closed(x, &rep, &m).unwrap());
                }
            }
        }
    }

    #[test]
    fn violating_rep_breaks_a_relation() {
        let one = Matrix::scalar(QScalar::one());
        let rep = QuiverRep::new(0, vec![1, 1, 1], vec![one.clone(), one.clone()], vec![one.clone(), one]).unwrap();
        assert!(act_word(&w("a"), &rep, &RepElement::basis_vector(2, 1, 0)).is_err());
        for mode in [ActionMode::Generic, ActionMode::ClosedForm] {
            let report = check_slq2_relations(&rep, mode);
            assert!(!report.rep_valid);
            let bc = report.relations.iter().find(|r| r.relation == "bc - cb").unwrap();
            assert!(!bc.holds);
            assert_eq!(bc.violations, vec![BasisRef { vertex: 2, index: 0 }]);
        }
    }
}
