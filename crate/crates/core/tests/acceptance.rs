//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines are visible in
//! `cargo test` output. Exits nonzero on any failure outside `KNOWN_GAPS`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use uqcomod::duality::{
    act_closed, act_word, check_duality_antipode, check_slq2_relations, psi_on_b, psi_sum, ActionMode, GenWord, Letter,
    RelationSet, WordSum,
};
use uqcomod::linalg::Matrix;
use uqcomod::pathcoalg::{basis_b, path_counit, path_delta, theta, theta_tensor, verify_identity_31, Path};
use uqcomod::qscalar::{gauss_binomial, QPoly};
use uqcomod::quiverrep::{
    classify_schurian, comodule_axiom_check, from_quantum_plane, hom_space, schurian_rep, Lambda, QuantumPlaneModule,
    QuiverRep, Rejection, RepElement, SchurianData,
};
use uqcomod::uqsl2::{
    antipode, coproduct, coproduct_on_leg, counit, counit_monomial, delta_closed_form, iterated_coproduct,
    monomials_up_to, UqElement, UqMonomial, UqTensor,
};
use uqcomod::QScalar;

/// Criteria whose literal statement does not hold for the objects involved;
/// they still print FAIL, with the measured counterexamples.
const KNOWN_GAPS: &[u32] = &[6];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn q(e: i64) -> QScalar {
    QScalar::q_pow(e)
}

fn s(text: &str) -> QScalar {
    text.parse().unwrap()
}

fn lambdas() -> Vec<Lambda> {
    ["0", "1", "q", "q^3", "inf"]
        .iter()
        .map(|x| x.parse().unwrap())
        .collect()
}

fn mono(l: i64, i: u32, j: u32) -> UqElement {
    UqElement::monomial(UqMonomial::new(l, i, j))
}

fn words_up_to_two() -> Vec<GenWord> {
    let mut words = vec![GenWord::unit()];
    for x in Letter::ALL {
        words.push(GenWord::letters(&[x]));
        for y in Letter::ALL {
            words.push(GenWord::letters(&[x, y]));
        }
    }
    words
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let grid: Vec<(i64, u32, u32)> = (-3..=3)
        .flat_map(|l| (0..=6u32).flat_map(move |n| (0..=n).map(move |i| (l, i, n - i))))
        .collect();
    let failures: Vec<_> = grid
        .par_iter()
        .filter(|&&(l, i, j)| !verify_identity_31(l, i, j).holds())
        .collect();
    let verbatim = (-3..=3).all(|l| {
        basis_b(l, 1, 1).unwrap().to_string() == format!("q^2*<{l}:[+]>")
            && basis_b(l, 2, 1).unwrap().to_string() == format!("q^2*<{l}:[+,-]> + q^4*<{l}:[-,+]>")
    });
    Outcome::new(
        failures.is_empty() && verbatim,
        format!(
            "{} of {} triples hold, low-degree b examples verbatim: {verbatim}, {:.1}s",
            grid.len() - failures.len(),
            grid.len(),
            started.elapsed().as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for l in -2..=2 {
        for n in 1..=4u32 {
            for i in 0..=n {
                let closed = delta_closed_form(l, i, n - i).unwrap();
                let generic = iterated_coproduct(&mono(l, 0, 0).multiply(&primed(i, n - i)), n as usize - 1);
                checked += 1;
                if closed != generic {
                    bad.push((l, i, n - i));
                }
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{checked} cases, mismatches {bad:?}"))
}

/// `E'^i F^j`, written through `E' = K^{-1} E` directly so the
/// comparison does not route through `primed_monomial`.
fn primed(i: u32, j: u32) -> UqElement {
    let mut x = UqElement::one();
    for _ in 0..i {
        x = x.multiply(&"K^-1*E".parse().unwrap());
    }
    x.multiply(&mono(0, 0, j))
}

fn criterion_3() -> Outcome {
    let monos = monomials_up_to(2, 3);
    let unit = UqElement::one();
    let failures: Vec<String> = monos
        .par_iter()
        .flat_map_iter(|m| {
            let x = UqElement::monomial(*m);
            let d = coproduct(&x);
            let mut bad = Vec::new();
            if coproduct_on_leg(&d, 0) != coproduct_on_leg(&d, 1) {
                bad.push(format!("coassociativity at {m}"));
            }
            if d.contract_leg(0, counit_monomial).to_element() != x
                || d.contract_leg(1, counit_monomial).to_element() != x
            {
                bad.push(format!("counit at {m}"));
            }
            let eta_eps = unit.scale(&counit(&x));
            for k in 0..2 {
                let conv = d
                    .expand_leg(k, |y| UqTensor::from_element(&antipode(&UqElement::monomial(*y))))
                    .multiply_legs();
                if conv != eta_eps {
                    bad.push(format!("antipode on leg {k} at {m}"));
                }
            }
            for n in &monos {
                let y = UqElement::monomial(*n);
                let xy = x.multiply(&y);
                if coproduct(&xy) != d.multiply(&coproduct(&y)) || counit(&xy) != counit(&x) * counit(&y) {
                    bad.push(format!("multiplicativity at {m}, {n}"));
                }
            }
            bad
        })
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!("{} monomials, failures {failures:?}", monos.len()),
    )
}

fn criterion_4() -> Outcome {
    let monos = monomials_up_to(2, 4);
    let coalgebra_ok = monos.par_iter().all(|m| {
        let x = UqElement::monomial(*m);
        let t = theta(&x);
        theta_tensor(&coproduct(&x)) == path_delta(&t) && path_counit(&t) == counit(&x)
    });
    let images: Vec<_> = monos.iter().map(|m| theta(&UqElement::monomial(*m))).collect();
    let mut columns: BTreeMap<Path, usize> = BTreeMap::new();
    for v in &images {
        for (p, _) in v.terms() {
            let next = columns.len();
            columns.entry(p.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![QScalar::zero(); columns.len()]; images.len()];
    for (r, v) in images.iter().enumerate() {
        for (p, c) in v.terms() {
            rows[r][columns[p]] = c.clone();
        }
    }
    let rank = Matrix::from_rows(rows).unwrap().rank();
    Outcome::new(
        coalgebra_ok && rank == monos.len(),
        format!(
            "coalgebra map on {} monomials: {coalgebra_ok}, rank {rank} of {}",
            monos.len(),
            monos.len()
        ),
    )
}

fn plane_module() -> QuantumPlaneModule {
    let x = Matrix::from_rows(vec![vec![s("0"), s("1")], vec![s("0"), s("0")]]).unwrap();
    let y = Matrix::from_rows(vec![vec![s("1"), s("0")], vec![s("0"), s("q^2")]]).unwrap();
    QuantumPlaneModule::new(x, y).unwrap()
}

fn constructed_reps() -> Vec<(String, QuiverRep)> {
    let mut out = Vec::new();
    for l in -2..=2 {
        for n in 0..=4 {
            for lambda in lambdas() {
                out.push((format!("M({l},{n},{lambda})"), schurian_rep(l, n, &lambda)));
            }
            out.push((format!("plane({l},{n})"), from_quantum_plane(l, n, &plane_module())));
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let reps = constructed_reps();
    let bad: Vec<String> = reps
        .par_iter()
        .filter(|(_, rep)| !comodule_axiom_check(rep).holds())
        .map(|(name, _)| name.clone())
        .collect();
    let one = Matrix::scalar(QScalar::one());
    let violating = QuiverRep::new(0, vec![1, 1, 1], vec![one.clone(), one.clone()], vec![one.clone(), one]).unwrap();
    let report = comodule_axiom_check(&violating);
    let negative = !report.chi_ratio_ok && report.has_violation(&[1, -1], &[-1, 1]);
    Outcome::new(
        bad.is_empty() && negative,
        format!(
            "{} constructed reps, failing {bad:?}; negative control flagged at (1,-1)/(-1,1): {negative}",
            reps.len()
        ),
    )
}

fn gap_rep() -> QuiverRep {
    QuiverRep::new(
        0,
        vec![1, 0, 1],
        vec![Matrix::zeros(1, 0), Matrix::zeros(0, 1)],
        vec![Matrix::zeros(1, 0), Matrix::zeros(0, 1)],
    )
    .unwrap()
}

fn dead_vertex_rep() -> QuiverRep {
    let (zero, one) = (Matrix::scalar(QScalar::zero()), Matrix::scalar(QScalar::one()));
    QuiverRep::new(0, vec![1, 1, 1], vec![zero.clone(), one], vec![zero.clone(), zero]).unwrap()
}

/// Whether the identity on the vertices of `sub` (1-dim everywhere, support
/// inside that of `big`) is a morphism `sub -> big`. Only squares for arrows
/// out of a vertex `l` of `sub` constrain it: `φ_{l-1} f = g φ_l`.
fn inclusion_commutes(sub: &QuiverRep, big: &QuiverRep) -> bool {
    use uqcomod::pathcoalg::Sign;
    let entry = |rep: &QuiverRep, l: i64, sign| {
        let m = rep.arrow_map(l, sign);
        if m.rows() == 0 || m.cols() == 0 {
            QScalar::zero()
        } else {
            m[(0, 0)].clone()
        }
    };
    sub.support().iter().all(|&l| {
        [Sign::Plus, Sign::Minus].into_iter().all(|sign| {
            let g = entry(big, l, sign);
            if sub.dim(l - 1) > 0 {
                entry(sub, l, sign) == g
            } else {
                g.is_zero()
            }
        })
    })
}

fn criterion_6() -> Outcome {
    let mut triples = Vec::new();
    for l in -2..=2 {
        for n in 1..=4 {
            for lambda in lambdas() {
                triples.push(SchurianData { l, n, lambda });
            }
        }
    }
    let reps: Vec<QuiverRep> = triples.iter().map(|t| schurian_rep(t.l, t.n, &t.lambda)).collect();
    let round_trip = triples
        .iter()
        .zip(&reps)
        .all(|(t, rep)| classify_schurian(rep).as_ref() == Ok(t));
    let end_one = reps.iter().all(|rep| hom_space(rep, rep).dim == 1);

    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|a| (0..reps.len()).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let nonzero: Vec<(usize, usize, usize)> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let d = hom_space(&reps[a], &reps[b]).dim;
            (d > 0).then_some((a, b, d))
        })
        .collect();
    // Isomorphic pairs would need nonzero maps both ways between reps of equal support.
    let isomorphic = nonzero
        .iter()
        .filter(|&&(a, b, _)| {
            (triples[a].l, triples[a].n) == (triples[b].l, triples[b].n)
                && nonzero.iter().any(|&(x, y, _)| (x, y) == (b, a))
        })
        .count();
    let witness = inclusion_commutes(
        &schurian_rep(-2, 1, &Lambda::Finite(QScalar::zero())),
        &schurian_rep(-2, 2, &Lambda::Finite(QScalar::zero())),
    );
    let gap = matches!(classify_schurian(&gap_rep()), Err(Rejection::SupportGap { .. }));
    let dead = matches!(classify_schurian(&dead_vertex_rep()), Err(Rejection::DeadVertex(_)));
    let sample: Vec<String> = nonzero
        .iter()
        .take(3)
        .map(|&(a, b, d)| {
            let (x, y) = (&triples[a], &triples[b]);
            format!(
                "Hom(M({},{},{}), M({},{},{})) = {d}",
                x.l, x.n, x.lambda, y.l, y.n, y.lambda
            )
        })
        .collect();
    Outcome::new(
        round_trip && end_one && nonzero.is_empty() && gap && dead,
        format!(
            "round trip {round_trip}, End = k {end_one}, nonzero Hom on {} of {} ordered distinct pairs \
             (isomorphic pairs {isomorphic}; e.g. {}; identity on the common vertices commutes \
             with every arrow for the first: {witness}), gap rejected {gap}, dead vertex rejected {dead}",
            nonzero.len(),
            pairs.len(),
            sample.join("; ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for l in -3..=3i64 {
        for n in 0..=4u32 {
            for i in 0..=n {
                for x in Letter::ALL {
                    let expected = match (x, n, i) {
                        (Letter::A, 0, 0) => q(l),
                        (Letter::A, 2, 1) => q(l + 1),
                        (Letter::B, 1, 1) => q(l + 1),
                        (Letter::C, 1, 0) => q(-l),
                        (Letter::D, 0, 0) => q(-l),
                        _ => QScalar::zero(),
                    };
                    checked += 1;
                    if psi_on_b(x, l, n, i) != expected {
                        mismatches.push(format!("{x}: b({l},{n},{i})"));
                    }
                }
            }
        }
    }
    Outcome::new(
        mismatches.is_empty(),
        format!("{checked} values, mismatches {mismatches:?}"),
    )
}

/// The published action of `x` on `v_i` of `M_(l, n, λ)`, as
/// `(coefficient, target index)` pairs.
fn listed_schurian_action(x: Letter, l: i64, n: usize, lambda: &Lambda, i: usize) -> Vec<(QScalar, usize)> {
    let (ii, nn) = (i as i64, n as i64);
    match lambda {
        Lambda::Finite(lam) => match x {
            Letter::A if i >= 2 => vec![(q(l + ii), i), (lam * &q(-2 * nn + l + 3 * ii - 3), i - 2)],
            Letter::A => vec![(q(l + ii), i)],
            Letter::B if i >= 1 => vec![(q(l + ii - 1), i - 1)],
            Letter::C if i >= 1 => vec![(lam * &q(-2 * nn + ii - l), i - 1)],
            Letter::B | Letter::C => vec![],
            Letter::D => vec![(q(-(l + ii)), i)],
        },
        Lambda::Infinity => match x {
            Letter::A => vec![(q(l + ii), i)],
            Letter::B => vec![],
            Letter::C if i >= 1 => vec![(q(-(l + ii)), i - 1)],
            Letter::C => vec![],
            Letter::D => vec![(q(-(l + ii)), i)],
        },
    }
}

fn from_pairs(l: i64, pairs: &[(QScalar, usize)]) -> RepElement {
    let mut out = RepElement::zero();
    for (c, k) in pairs {
        out.add_component(l + *k as i64, std::slice::from_ref(c));
    }
    out
}

/// The published actions on the quantum-plane module, with `u_i` on vertex
/// `l + i - 1`. As printed, "a u_i = 0 otherwise" also drops the diagonal term
/// for `i < 3`; the closed-form action keeps it. `literal` follows the print.
fn listed_plane_action(
    x: Letter,
    l: i64,
    u: &[QScalar],
    i: usize,
    module: &QuantumPlaneModule,
    literal: bool,
) -> RepElement {
    let ii = i as i64;
    let at = |k: usize| l + k as i64 - 1;
    let mut out = RepElement::zero();
    let scaled = |v: Vec<QScalar>, e: i64| -> Vec<QScalar> { v.into_iter().map(|c| c.mul_q_pow(e)).collect() };
    match x {
        Letter::A => {
            if i >= 3 {
                out.add_component(at(i), &scaled(u.to_vec(), ii + l - 1));
                let yx = module.y().checked_mul(module.x()).unwrap();
                out.add_component(at(i - 2), &scaled(yx.apply(u).unwrap(), ii + l - 2));
            } else if !literal {
                out.add_component(at(i), &scaled(u.to_vec(), ii + l - 1));
            }
        }
        Letter::B if i >= 2 => out.add_component(at(i - 1), &scaled(module.x().apply(u).unwrap(), ii + l - 2)),
        Letter::C if i >= 2 => out.add_component(at(i - 1), &scaled(module.y().apply(u).unwrap(), -(ii + l - 1))),
        Letter::B | Letter::C => {}
        Letter::D => out.add_component(at(i), &scaled(u.to_vec(), -(ii + l - 1))),
    }
    out
}

fn criterion_8() -> Outcome {
    let reps = constructed_reps();
    let disagreements: Vec<String> = reps
        .par_iter()
        .flat_map_iter(|(name, rep)| {
            let mut bad = Vec::new();
            for m in rep.basis() {
                for x in Letter::ALL {
                    let generic = act_word(&WordSum::letters(&[x]), rep, &m).unwrap();
                    if generic != act_closed(x, rep, &m).unwrap() {
                        bad.push(format!("{x} on {m} in {name}"));
                    }
                }
            }
            bad
        })
        .collect();

    let mut formula_bad = Vec::new();
    for l in -2..=2 {
        for n in 0..=4 {
            for lambda in lambdas() {
                let rep = schurian_rep(l, n, &lambda);
                for i in 0..=n {
                    let v = RepElement::basis_vector(l + i as i64, 1, 0);
                    for x in Letter::ALL {
                        let expected = from_pairs(l, &listed_schurian_action(x, l, n, &lambda, i));
                        let word = WordSum::letters(&[x]);
                        if act_closed(x, &rep, &v).unwrap() != expected
                            || act_word(&word, &rep, &v).unwrap() != expected
                        {
                            formula_bad.push(format!("{x}.v_{i} in M({l},{n},{lambda})"));
                        }
                    }
                }
            }
        }
    }

    let module = plane_module();
    let vectors = [vec![s("1"), s("0")], vec![s("0"), s("1")], vec![s("2"), s("q + 1")]];
    let mut plane_bad = Vec::new();
    let mut literal_bad = 0;
    for l in -1..=1 {
        let n = 3;
        let rep = from_quantum_plane(l, n, &module);
        for i in 1..=n + 1 {
            for u in &vectors {
                let m = RepElement::homogeneous(l + i as i64 - 1, u.clone());
                for x in Letter::ALL {
                    let got = act_closed(x, &rep, &m).unwrap();
                    let word = WordSum::letters(&[x]);
                    if got != listed_plane_action(x, l, u, i, &module, false)
                        || act_word(&word, &rep, &m).unwrap() != got
                    {
                        plane_bad.push(format!("{x}.u_{i} at l = {l}"));
                    }
                    if got != listed_plane_action(x, l, u, i, &module, true) {
                        literal_bad += 1;
                    }
                }
            }
        }
    }
    Outcome::new(
        disagreements.is_empty() && formula_bad.is_empty() && plane_bad.is_empty(),
        format!(
            "generic = closed form on {} reps: {:?}; module formulas: {:?}; plane module: {:?} \
             ({literal_bad} cases differ from the printed a-line, all of them a.u_1 or a.u_2)",
            reps.len(),
            disagreements,
            formula_bad,
            plane_bad
        ),
    )
}

fn criterion_9() -> Outcome {
    let reps = constructed_reps();
    let failing: Vec<String> = reps
        .par_iter()
        .filter(|(_, rep)| {
            !check_slq2_relations(rep, ActionMode::Generic).all_hold()
                || !check_slq2_relations(rep, ActionMode::ClosedForm).all_hold()
        })
        .map(|(name, _)| name.clone())
        .collect();
    let rels = RelationSet::slq2();
    let monos = monomials_up_to(3, 5);
    let nonvanishing: Vec<String> = monos
        .par_iter()
        .flat_map_iter(|m| {
            let u = UqElement::monomial(*m);
            rels.iter()
                .filter(|(_, r)| !psi_sum(r, &u).is_zero())
                .map(|(name, _)| format!("{name} on {m}"))
                .collect::<Vec<_>>()
        })
        .collect();
    Outcome::new(
        failing.is_empty() && nonvanishing.is_empty(),
        format!(
            "relations on {} reps (both modes): failing {failing:?}; psi of {} relations on {} monomials: nonzero {nonvanishing:?}",
            reps.len(),
            rels.len(),
            monos.len()
        ),
    )
}

fn criterion_10() -> Outcome {
    let words = words_up_to_two();
    let monos = monomials_up_to(2, 3);
    let bad: Vec<String> = monos
        .par_iter()
        .flat_map_iter(|m| {
            let u = UqElement::monomial(*m);
            words
                .iter()
                .filter(|w| !check_duality_antipode(w, &u))
                .map(|w| format!("{w} on {m}"))
                .collect::<Vec<_>>()
        })
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} words against {} monomials, failures {bad:?}",
            words.len(),
            monos.len()
        ),
    )
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec((-3i64..=3, rational()), 0..4).prop_map(QPoly::from_terms)
}

fn scalar() -> impl Strategy<Value = QScalar> {
    (poly(), poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            QScalar::from_poly(n)
        } else {
            QScalar::from_fraction(n, d).unwrap()
        }
    })
}

fn uq_element() -> impl Strategy<Value = UqElement> {
    prop::collection::vec(((-3i64..=3, 0u32..=3, 0u32..=3), scalar()), 0..4).prop_map(|terms| {
        let mut x = UqElement::zero();
        for ((l, i, j), c) in terms {
            x.add_term(UqMonomial::new(l, i, j), &c);
        }
        x
    })
}

fn run_property<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> bool) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, |v| {
            prop_assert!(test(v));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn field_axioms((x, y, z): (QScalar, QScalar, QScalar)) -> bool {
    let (zero, one) = (QScalar::zero(), QScalar::one());
    let inverse_ok = x.is_zero() || &x * &x.inv().unwrap() == one;
    &x + &y == &y + &x
        && &x * &y == &y * &x
        && &(&x + &y) + &z == &x + &(&y + &z)
        && &(&x * &y) * &z == &x * &(&y * &z)
        && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
        && &x + &zero == x
        && &x * &one == x
        && (&x + &-&x).is_zero()
        && inverse_ok
        && x.recanonicalize() == x
        && x.to_string().parse::<QScalar>().unwrap() == x
}

fn pascal() -> bool {
    let bases = [q(1), q(2), q(-2)];
    bases.iter().all(|b| {
        (1..=8u32).all(|n| {
            (1..n).all(|k| {
                let lhs = gauss_binomial(n, k, b).unwrap();
                let rhs = gauss_binomial(n - 1, k - 1, b).unwrap()
                    + b.pow(k as i64).unwrap() * gauss_binomial(n - 1, k, b).unwrap();
                lhs == rhs
            }) && gauss_binomial(n, 0, b).unwrap().is_one()
                && gauss_binomial(n, n, b).unwrap().is_one()
        })
    })
}

fn cli_contract() -> Result<String, String> {
    let script = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts/cli_contract.sh");
    let out = Command::new("bash")
        .arg(&script)
        .env("UQCOMOD", env!("CARGO_BIN_EXE_uqcomod"))
        .output()
        .map_err(|e| format!("cannot run {}: {e}", script.display()))?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let summary = stdout.lines().last().unwrap_or("").to_string();
    if out.status.success() {
        Ok(summary)
    } else {
        Err(stdout)
    }
}

fn criterion_11() -> Outcome {
    let field = run_property(256, (scalar(), scalar(), scalar()), field_axioms);
    let round_trip = run_property(100, uq_element(), |x| {
        let text = x.to_string();
        text.parse::<UqElement>()
            .map(|y| y == x && y.to_string() == text)
            .unwrap_or(false)
    });
    let pascal_ok = pascal();
    let cli = cli_contract();
    Outcome::new(
        field.is_ok() && round_trip.is_ok() && pascal_ok && cli.is_ok(),
        format!(
            "field axioms (256 cases): {:?}; parser round trip (100 cases): {:?}; Pascal n <= 8: {pascal_ok}; cli: {:?}",
            field.map(|_| "ok"),
            round_trip.map(|_| "ok"),
            cli
        ),
    )
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        (1, "theta(K^l E'^i F^j) closed form, i+j <= 6, |l| <= 3", criterion_1),
        (2, "closed-form iterated coproduct, i+j <= 4, |l| <= 2", criterion_2),
        (3, "Hopf axioms on PBW monomials, i+j <= 3, |l| <= 2", criterion_3),
        (4, "theta is an injective coalgebra map, degree <= 4", criterion_4),
        (
            5,
            "chi-ratio criterion and comodule axioms, with negative control",
            criterion_5,
        ),
        (
            6,
            "Schurian classification, End and Hom dimensions, decomposables",
            criterion_6,
        ),
        (7, "pairing table on b(l, n, i)", criterion_7),
        (8, "closed-form actions and the worked module examples", criterion_8),
        (
            9,
            "SL_q(2) relations annihilate modules and vanish under psi",
            criterion_9,
        ),
        (10, "antipode compatibility of the pairing", criterion_10),
        (
            11,
            "scalar field axioms, Pascal, parser round trip, CLI contract",
            criterion_11,
        ),
    ];
    let mut unexpected = 0;
    for (id, name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{tag} {id:>2} {name} [{:.1}s]", started.elapsed().as_secs_f64());
        println!("        {}", outcome.detail);
        if !outcome.pass && !KNOWN_GAPS.contains(&id) {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
