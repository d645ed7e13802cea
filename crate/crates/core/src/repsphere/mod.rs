//! Representation spheres of `C_{2^n}`: cellular chains with their group
//! action, and Bredon homology and cohomology with constant coefficients.

mod bredon;
mod complex;
mod rep;

pub use bredon::{
    bredon_cohomology, bredon_homology, gap_check, level_complexes, phi_hz, underlying_homology, Coeff,
    GapEntry, GapReport, GradedGroups, LevelComplexes, PhiHzReport,
};
pub use complex::{build_complex, build_complex_with, BlockKind, BuildMode, PermChainComplex};
pub use rep::{parse_group, RepDescriptor};
