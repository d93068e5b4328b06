//! Linear codes: the data model, saturation closure of index sets, duals and
//! scalar extension, plus the generator-matrix file format.

mod codefile;
mod index_set;
mod linear;

pub use codefile::{format_code, parse_code, CodeFileError};
pub use index_set::{IndexSet, MAX_LENGTH};
pub use linear::Code;
