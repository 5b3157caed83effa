//! Projective resolutions, Ext and Tor, dimensions, and complexes of projectives.

mod complex;
mod derived;
mod proj;
mod resolution;
#[cfg(test)]
mod tests;

pub use complex::{sgldim_probe, staircase, ProbeResult, ProjComplex};
pub use derived::{
    bimodule_sides, combine_dimensions, dimension_of, ext_dim, ext_dims, ext_dims_from, global_dim,
    is_exceptional, is_homological_epi, is_ring_epi, proj_dim, tensor_dim, tor_dim, tor_dims,
    tor_dims_from, tor_table, Dimension, TensorResult, Verdict, DEFAULT_CAP,
};
pub use proj::{regular_hom_dim, ProjMap};
pub use resolution::{minimal_projective_resolution, resolve_to, Resolution, ResolutionStatus};
