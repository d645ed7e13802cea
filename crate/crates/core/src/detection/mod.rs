//! Group cohomology of `C₈` with coefficients in `A[w^{±1}]`, Bockstein
//! images, valuation bounds, and the `s_{H,i}` coefficients, gathered into
//! one pass/fail report.

mod bockstein;
mod cohomology;
mod report;
mod solver;
mod valuation;

pub use bockstein::{bockstein_image, cobar_class, BocksteinImage};
pub use cohomology::{cohomology_r, cohomology_r_mod2, CohClass, RModule};
pub use report::{detection_report, DetectionReport, SEntry};
pub use solver::{s_closed_form_degree1, s_solver, SValue};
pub use valuation::{alpha_valuation, beta_valuation, c_jk, BetaBound, ValuationTerm};
