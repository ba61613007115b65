pub mod cli;
pub mod corpus;
pub mod decide;
pub mod error;
pub mod ideal;
pub mod input;
pub mod invariants;
pub mod kernel;
pub mod module;
pub mod rees;
pub mod report;
pub mod s2;

pub use error::{Error, Result};
