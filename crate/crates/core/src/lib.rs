//! Exact computations around representation spheres of cyclic 2-groups,
//! slice spectral sequence charts, formal A-modules over `Z[ζ₈]`, and the
//! cohomology of `C₈` with coefficients in `A[w^{±1}]`.

pub mod detection;
pub mod error;
pub mod exactalg;
pub mod fgl;
pub mod repsphere;
pub mod slicess;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{
    AbGroup, CyclotomicFrac, CyclotomicInt, GradedElem, GradedFrac, IntMatrix, Ring, SnfResult,
    SparsePoly, TruncSeries, F2,
};
