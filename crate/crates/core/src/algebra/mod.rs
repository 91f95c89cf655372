//! Exact arithmetic over F_q, F_q[t] and F_q(t), q = p^e with p > 3.

pub mod factor;
pub mod field;
pub mod logfield;
pub mod poly;
pub mod ratfunc;
pub mod text;

pub use factor::{factor, is_irreducible, monic_irreducibles};
pub use field::{Fq, FqElem};
pub use logfield::LogField;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::{poly_from_str, poly_to_string, ratfunc_from_str, ratfunc_to_string};
