//! Finite-dimensional right modules, morphisms and their basic constructions.

mod endo;
mod hom;
mod rep;
#[cfg(test)]
mod tests;

pub use endo::{
    count_nonisomorphic_summands, decompose, in_add, indecomposables_isomorphic, is_indecomposable,
    is_isomorphic, split, EndAlgebra,
};
pub use hom::{combine, hom_dim, hom_space, quotient_by_trace, trace};
pub use rep::{morphism_parts, Module, Morphism, MorphismParts, Submodule};
