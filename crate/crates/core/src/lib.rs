pub mod algebra;
pub mod cli;
pub mod error;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod module;
pub mod tilting;

pub use error::{Error, Result};
