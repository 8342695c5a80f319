//! U_q(sl_2) in the PBW basis `K^l E^i F^j`, with its Hopf structure.

mod closed_form;
mod element;
mod hopf;
mod parse;
mod rewrite;
mod tensor;

pub use closed_form::{delta_closed_form, delta_closed_form_with_arity, primed_monomial, profiles, SRProfile};
pub(crate) use element::write_scaled;
pub use element::{Gen, UqElement, UqMonomial};
pub use hopf::{
    antipode, antipode_monomial, coproduct, coproduct_monomial, coproduct_on_leg, counit, counit_monomial,
    iterated_coproduct,
};
pub use rewrite::{normal_form, normal_form_with, Strategy};
pub use tensor::UqTensor;

/// Monomials `K^l E^i F^j` with `|l| <= l_max` and `i + j <= max_degree`.
pub fn monomials_up_to(l_max: i64, max_degree: u32) -> Vec<UqMonomial> {
    let mut out = Vec::new();
    for l in -l_max..=l_max {
        for n in 0..=max_degree {
            for i in 0..=n {
                out.push(UqMonomial::new(l, i, n - i));
            }
        }
    }
    out
}
