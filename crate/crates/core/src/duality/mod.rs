//! The pairing between SL_q(2) and U_q(sl_2) and the SL_q(2)-modules it
//! induces on comodules.

mod action;
mod psi;
mod word;

pub use action::{
    act_closed, act_closed_word, act_word, act_word_with, check_slq2_relations, check_slq2_relations_with, ActionMode,
    BasisRef, RelationOutcome, RelationReport,
};
pub use psi::{
    b_normalization, check_duality_antipode, check_phi_multiplicative, primed_table_agrees, psi_gen, psi_gen_monomial,
    psi_gen_primed, psi_letters, psi_on_b, psi_sum, psi_word, PsiEvaluator,
};
pub use word::{word_coproduct, GenWord, Letter, RelationSet, WordSum};
