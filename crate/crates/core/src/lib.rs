pub mod analysis;
pub mod cli;
pub mod construction;
pub mod error;
pub mod exact;
pub mod graph;
pub mod instance;
pub mod numbering;
pub mod schedule;
pub mod validation;

pub use error::{Error, Result};
