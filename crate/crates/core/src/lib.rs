//! Exact computations on cubic hypersurfaces, their Fano varieties of lines
//! and the Grassmannians those varieties live in.
//!
//! Everything here is exact: rationals are arbitrary precision and no floating
//! point value enters any check. The modules build on each other:
//!
//! * [`exact`]: rationals, weighted polynomials, dense rational matrices.
//! * [`grassmann`]: the Chow ring of `Gr(2, n+2)`, Schubert calculus and the
//!   class of the Fano variety of lines.
//! * [`fano`]: numerical tautological ring of the Fano variety.
//! * [`hodge`]: Hodge diamonds and E-polynomials of the cubic, its Hilbert
//!   square and its Fano variety.
//! * [`diagonal`]: tautological models of `X`, `X^2`, `X^3` with diagonal
//!   classes and the small-diagonal decomposition.
//! * [`verify`]: the batch runner behind the `verify` binary.

pub mod diagonal;
pub mod error;
pub mod exact;
pub mod fano;
pub mod grassmann;
pub mod hodge;
pub mod verify;

pub use error::{Error, Result};
