//! Arithmetic of non-isotrivial elliptic curves y^2 = x^3 + Ax + B over
//! K = F_q(t), char p > 3: reduction data and Kodaira types, local root
//! numbers, Verschiebung invariants (sigma, norm symbols, z(V)), formal
//! groups, and the point-counted L-function with its functional equation,
//! analytic ranks and parity cross-checks.

pub mod algebra;
pub mod curve;
pub mod error;
pub mod formal;
pub mod lfunction;
pub mod localdata;
pub mod places;
pub mod util;

pub use error::{Error, Result};
