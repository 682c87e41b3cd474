//! Exact arithmetic substrate.

mod matrix;
mod poly;
mod rat;

pub use matrix::MatQ;
pub use poly::{poly_mul, Monomial, VarSet, WPoly};
pub use rat::{fmt_rat, parse_rat, rat, rat_int, Rat};
