//! Document formats, module expressions, reports and fixture golden checks.

mod doc;
mod expr;
mod golden;
mod report;
#[cfg(test)]
mod tests;

pub use doc::{
    field_name, json_error, parse_field, parse_json, to_json, AlgebraDocument, ArrowDoc, ComplexDocument,
    ModuleDocument, QuiverDoc, TermDoc, FORMAT_VERSION,
};
pub use expr::{
    complex_from_document, complex_to_document, element_from_terms, module_from_document, module_from_expr,
    module_to_document, terms_from_element, ModuleExpr,
};
pub use golden::{expected_basics, fixture_algebra, fx43_staircase, verify_fixtures, GoldenRow};
pub use report::{quiver_dot, tree_dot, Provenance, Report};
