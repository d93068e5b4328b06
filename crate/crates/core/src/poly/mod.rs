//! Polynomials in `q` ([`QPoly`]) and in `z, x, y` over `Z[q]` ([`WPoly`]).

pub mod json;
mod qpoly;
mod text;
mod wpoly;

pub use qpoly::QPoly;
pub use text::ParseError;
pub use wpoly::{Monomial, WPoly};
