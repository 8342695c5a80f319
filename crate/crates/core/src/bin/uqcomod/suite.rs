//! A quick end-to-end self check over small grids.

use rayon::prelude::*;

use uqcomod::duality::{
    act_closed, act_word_with, check_duality_antipode, check_slq2_relations_with, psi_on_b, ActionMode, GenWord,
    Letter, PsiEvaluator, WordSum,
};
use uqcomod::pathcoalg::{path_counit, path_delta, theta, theta_tensor, verify_identity_31};
use uqcomod::quiverrep::{classify_schurian, comodule_axiom_check, hom_space, schurian_rep, Lambda};
use uqcomod::uqsl2::{
    antipode_monomial, coproduct, coproduct_on_leg, counit, counit_monomial, delta_closed_form, iterated_coproduct,
    monomials_up_to, primed_monomial, UqElement, UqTensor,
};
use uqcomod::QScalar;

type Check = (&'static str, fn() -> bool);

const LAMBDAS: [&str; 5] = ["0", "1", "q", "q^3", "inf"];

fn theta_primed() -> bool {
    (-2..=2).all(|l| (0..=4u32).all(|n| (0..=n).all(|i| verify_identity_31(l, i, n - i).holds())))
}

fn closed_form_coproduct() -> bool {
    (-1..=1).all(|l| {
        (1..=3u32).all(|n| {
            (0..=n).all(|i| {
                let closed = delta_closed_form(l, i, n - i).expect("positive degree");
                closed == iterated_coproduct(&primed_monomial(l, i, n - i), (n - 1) as usize)
            })
        })
    })
}

fn hopf_axioms() -> bool {
    let monos = monomials_up_to(1, 2);
    let unit = UqElement::one();
    monos.iter().all(|m| {
        let x = UqElement::monomial(*m);
        let d = coproduct(&x);
        let coassoc = coproduct_on_leg(&d, 0) == coproduct_on_leg(&d, 1);
        let counit_ok = d.contract_leg(0, counit_monomial).to_element() == x
            && d.contract_leg(1, counit_monomial).to_element() == x;
        let s_leg = |k| {
            d.expand_leg(k, |m| UqTensor::from_element(&antipode_monomial(m)))
                .multiply_legs()
        };
        let eta_eps = unit.scale(&counit(&x));
        let antipode_ok = s_leg(0) == eta_eps && s_leg(1) == eta_eps;
        let multiplicative = monos.iter().all(|n| {
            let y = UqElement::monomial(*n);
            coproduct(&x.multiply(&y)) == d.multiply(&coproduct(&y))
                && counit(&x.multiply(&y)) == &counit(&x) * &counit(&y)
        });
        coassoc && counit_ok && antipode_ok && multiplicative
    })
}

fn theta_coalgebra_map() -> bool {
    monomials_up_to(1, 3).iter().all(|m| {
        let x = UqElement::monomial(*m);
        theta_tensor(&coproduct(&x)) == path_delta(&theta(&x)) && path_counit(&theta(&x)) == counit(&x)
    })
}

fn comodule_axioms() -> bool {
    LAMBDAS.iter().all(|lambda| {
        let lambda: Lambda = lambda.parse().expect("static");
        (0..=3).all(|n| comodule_axiom_check(&schurian_rep(0, n, &lambda)).holds())
    })
}

fn schurian_classification() -> bool {
    LAMBDAS.iter().all(|lambda| {
        let lambda: Lambda = lambda.parse().expect("static");
        (1..=3).all(|n| {
            let rep = schurian_rep(-1, n, &lambda);
            let back = classify_schurian(&rep);
            back.is_ok_and(|d| d.l == -1 && d.n == n && d.lambda == lambda) && hom_space(&rep, &rep).dim == 1
        })
    })
}

fn psi_values() -> bool {
    (-2..=2).all(|l| {
        (0..=3u32).all(|n| {
            (0..=n).all(|i| {
                Letter::ALL.iter().all(|&x| {
                    let expected = match (x, n, i) {
                        (Letter::A, 0, 0) => QScalar::q_pow(l),
                        (Letter::D, 0, 0) => QScalar::q_pow(-l),
                        (Letter::A, 2, 1) | (Letter::B, 1, 1) => QScalar::q_pow(l + 1),
                        (Letter::C, 1, 0) => QScalar::q_pow(-l),
                        _ => QScalar::zero(),
                    };
                    psi_on_b(x, l, n, i) == expected
                })
            })
        })
    })
}

fn actions_and_relations() -> bool {
    let mut eval = PsiEvaluator::new();
    LAMBDAS.iter().all(|lambda| {
        let lambda: Lambda = lambda.parse().expect("static");
        (1..=3).all(|n| {
            let rep = schurian_rep(0, n, &lambda);
            let agree = rep.basis().iter().all(|m| {
                Letter::ALL.iter().all(|&x| {
                    let generic = act_word_with(&mut eval, &WordSum::letters(&[x]), &rep, m);
                    generic.ok() == act_closed(x, &rep, m).ok()
                })
            });
            agree && check_slq2_relations_with(&mut eval, &rep, ActionMode::Generic).all_hold()
        })
    })
}

fn duality_antipode() -> bool {
    let mut words = vec![GenWord::unit()];
    for x in Letter::ALL {
        words.push(GenWord::letters(&[x]));
        for y in Letter::ALL {
            words.push(GenWord::letters(&[x, y]));
        }
    }
    monomials_up_to(1, 2).iter().all(|m| {
        words
            .iter()
            .all(|w| check_duality_antipode(w, &UqElement::monomial(*m)))
    })
}

const CHECKS: [Check; 9] = [
    ("theta of the primed basis (i+j<=4, |l|<=2)", theta_primed),
    ("closed-form coproduct (i+j<=3, |l|<=1)", closed_form_coproduct),
    ("hopf axioms (i+j<=2, |l|<=1)", hopf_axioms),
    ("theta is a coalgebra map (i+j<=3, |l|<=1)", theta_coalgebra_map),
    ("comodule axioms for M(0,n,lambda), n<=3", comodule_axioms),
    ("schurian round trip and End = k, n<=3", schurian_classification),
    ("pairing on b(l,n,i), n<=3", psi_values),
    ("closed-form actions and relations, n<=3", actions_and_relations),
    ("antipode duality (words of length<=2)", duality_antipode),
];

/// Runs every check, returning `(name, passed)` in a fixed order.
pub fn run() -> Vec<(&'static str, bool)> {
    CHECKS.par_iter().map(|(name, f)| (*name, f())).collect()
}
