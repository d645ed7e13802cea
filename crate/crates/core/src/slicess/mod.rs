//! Slice cells, vanishing regions, the monomial-orbit refinement of the
//! underlying homotopy of `MU^{((G))}`, and the `a`-inverted slice chart.

mod cells;
mod inverted;
mod refine;
mod region;

pub use cells::{induce_cell, restrict_cell, vanishing_range, SliceCell};
pub use inverted::{inverted_ss_run, mo_poincare_series, InvertedRun, PageStats};
pub use refine::{rank_pi_u, refine_orbits, MonomialOrbit, OrbitRefinement};
pub use region::{e2_region_basis, E2Entry, RegionBasis};
