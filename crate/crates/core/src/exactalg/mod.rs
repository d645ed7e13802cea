//! Exact arithmetic: rings, Smith normal form, `Z[ζ₈]`, truncated series,
//! sparse graded polynomials, F₂ linear algebra and chain complex reduction.

mod abgroup;
pub mod complex;
mod cyclotomic;
pub mod f2;
mod graded;
pub mod group_ring;
mod matrix;
mod poly;
mod ring;
mod series;

pub use abgroup::AbGroup;
pub use cyclotomic::{CyclotomicFrac, CyclotomicInt};
pub use f2::{BitMatrix, BitVec, F2};
pub use graded::{GradedElem, GradedFrac};
pub use group_ring::unit_test_group_ring;
pub use matrix::{invariant_factors, snf, IntMatrix, SnfResult, Subquotient};
pub use poly::{Mono, SparsePoly, Var};
pub use ring::Ring;
pub use series::{BiSeries, TruncSeries};
