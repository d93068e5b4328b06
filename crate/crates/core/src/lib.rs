//! Comprehensive and refined weight enumerators of linear codes, computed
//! exactly from the lattice of saturated subsets of coordinate positions.

pub mod algebra;
pub mod closed_forms;
pub mod code;
pub mod enumerators;
mod error;
pub mod fixtures;
pub mod lattice;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod specialize;

pub use error::{Error, Result};
