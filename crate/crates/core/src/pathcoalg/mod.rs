//! The path coalgebra of the doubled line quiver: vertices `e_l` for every
//! integer `l`, and two arrows (upper `+`, lower `-`) from `e_l` to `e_{l-1}`.

mod path;
mod theta;
mod vector;

pub use path::{Path, Sign, SignVector};
pub use theta::{
    basis_b, chi, express_in_b_basis, theta, theta_closed_form, theta_monomial, theta_tensor, verify_identity_31,
    BIndex, IdentityCheck,
};
pub use vector::{path_counit, path_counit_path, path_delta, path_delta_path, PathTensor, PathVector};
