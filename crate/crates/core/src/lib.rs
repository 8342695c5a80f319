//! Exact symbolic computations for the quantum group U_q(sl_2) viewed as a
//! subcoalgebra of the path coalgebra of the doubled line quiver, its
//! comodules as quiver representations, and the SL_q(2)-module structures
//! induced through the Drinfeld duality.
//!
//! All arithmetic is exact over the rational-function field Q(q).

pub mod duality;
pub mod error;
pub mod linalg;
pub mod pathcoalg;
pub mod qscalar;
pub mod quiverrep;
pub mod uqsl2;

pub use error::{Error, Result};
pub use qscalar::{QPoly, QScalar};
