//! Tilting modules, the approximation `ℓ(A)`, recollement data, heredity ideals,
//! exceptional sequences and stratifications of directed algebras.

mod brute;
mod certificate;
mod ell;
mod extension;
mod strat;

pub use brute::{
    adjunction_check, euler_form, ext_euler_characteristic, kronecker_sample, random_module,
    thin_indecomposables, tilting_oracle, AdjunctionRow, OracleRow,
};
pub use certificate::{check_tilting, left_approximation, t_resolution_with, TResolution, TiltingCertificate, TiltingSummary};
pub use ell::{
    ell, ell_from, epi_verdict, in_perpendicular, induced_epi, perpendicular_epi, recollement_from_tilting,
    t1_over_c, Ell, FailureReport, InducedEpi, K0Ranks, RecollementDatum, RecollementOutcome, RecollementSummary,
};
pub use extension::{basic_part, bongartz_complement, universal_extension, Bongartz, UniversalExtension};
pub use strat::{
    compare_factor_multisets, exceptional_sequence_check, heredity_check, is_complete, legal_orders,
    simple_projectives, stratify, ExceptionalSequence, HeredityReport, StratTree,
};
