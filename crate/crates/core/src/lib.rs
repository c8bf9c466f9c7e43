pub mod cli;
pub mod cone;
pub mod constructions;
pub mod error;
pub mod exactmath;
pub mod ideal;
pub mod tameness;

pub use error::{Error, Result};
