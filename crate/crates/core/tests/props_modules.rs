use proptest::prelude::*;

use uqcomod::duality::{act_word, Letter, WordSum};
use uqcomod::pathcoalg::{path_delta, theta, theta_tensor};
use uqcomod::quiverrep::{coaction, schurian_rep, Lambda, RepElement};
use uqcomod::uqsl2::{coproduct, UqElement, UqMonomial};
use uqcomod::QScalar;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::A), Just(Letter::B), Just(Letter::C), Just(Letter::D)]
}

fn lambda() -> impl Strategy<Value = Lambda> {
    prop_oneof![
        Just(Lambda::Finite(QScalar::zero())),
        Just(Lambda::Finite(QScalar::one())),
        Just(Lambda::Finite(QScalar::q())),
        Just(Lambda::Finite("q^2 + 1".parse().unwrap())),
        Just(Lambda::Infinity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // x.(y.m) = (xy).m, words acting right to left.
    #[test]
    fn module_axiom_coherence(
        u in prop::collection::vec(letter(), 0..=3),
        v in prop::collection::vec(letter(), 0..=3),
        l in -2i64..=2,
        n in 0usize..=3,
        lam in lambda(),
        pick in any::<prop::sample::Index>(),
    ) {
        let rep = schurian_rep(l, n, &lam);
        let basis = rep.basis();
        let m = &basis[pick.index(basis.len())];
        let (wu, wv) = (WordSum::letters(&u), WordSum::letters(&v));
        let joined = act_word(&wu.multiply(&wv), &rep, m).unwrap();
        let stepwise = act_word(&wu, &rep, &act_word(&wv, &rep, m).unwrap()).unwrap();
        prop_assert_eq!(joined, stepwise);
    }

    #[test]
    fn theta_intertwines_coproducts(l in -2i64..=2, i in 0u32..=3, j in 0u32..=3) {
        let x = UqElement::monomial(UqMonomial::new(l, i, j));
        prop_assert_eq!(theta_tensor(&coproduct(&x)), path_delta(&theta(&x)));
    }

    // The vertex part of the coaction is the element itself.
    #[test]
    fn coaction_counit(l in -2i64..=2, n in 0usize..=4, lam in lambda(), k in 0usize..=4) {
        let rep = schurian_rep(l, n, &lam);
        let k = k.min(n);
        let m = RepElement::basis_vector(l + k as i64, 1, 0);
        prop_assert_eq!(coaction(&rep, &m).unwrap().counit_part(), m);
    }
}
