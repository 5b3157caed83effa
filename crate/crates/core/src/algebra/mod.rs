//! Quiver presentations and finite-dimensional algebras.

pub mod build;
pub mod fd;
pub mod fixtures;
pub mod morphism;
pub mod quiver;
pub mod raw;

pub use build::{build_algebra, DEFAULT_PATH_CAP};
pub use fd::{Algebra, AlgebraSummary, BasisWord, Generator, Origin, Signature};
pub use fixtures::{dual_numbers, fixture, FIXTURE_NAMES};
pub use morphism::{quotient_map, AlgebraMap};
pub use quiver::{Arrow, Path, Presentation, Quiver, Relation};
pub use raw::RawAlgebra;

#[cfg(test)]
mod tests;
