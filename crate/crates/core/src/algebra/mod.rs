//! Exact arithmetic: finite fields and the rationals, matrices over them, and
//! integer-lattice normal forms.

mod field;
pub(crate) mod fp_poly;
mod intmat;
mod matrix;
pub mod primes;

pub use field::{FiniteField, Field, FieldElem};
pub use intmat::{Hnf, IntMatrix, Smith};
pub use matrix::{Matrix, Rref, SpanBasis};
