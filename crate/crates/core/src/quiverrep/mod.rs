//! Finite-dimensional representations of the doubled line quiver and the
//! U_q(sl_2)-comodules they define.

mod comodule;
mod hom;
mod rep;
mod schurian;

pub use comodule::{coaction, comodule_axiom_check, AxiomReport, ChiViolation, Coaction};
pub use hom::{hom_space, HomSpace, MorphismFamily};
pub use rep::{QuiverRep, RepElement, ValidationReport};
pub use schurian::{
    classify_schurian, from_quantum_plane, schurian_rep, Lambda, QuantumPlaneModule, Rejection, SchurianData,
};
