//! Formal group laws over exact rings: the unoriented generators `h_j`, the
//! generators `r̄_k`, Hazewinkel images and the formal `A`-module over `A[w^{±1}]`.

mod amodule;
mod generators;
mod hazewinkel;

pub use amodule::{fgl_from_log, t_functions, t_recursion, FormalAModule, TEntry, TTable};
pub use generators::{mo_generators, mo_independence_ranks, rbar_generators, MoGenerators, RbarGenerators};
pub use hazewinkel::{hazewinkel_images, HazewinkelImage};
