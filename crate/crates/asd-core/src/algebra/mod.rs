//! GF(2^m) arithmetic, univariate polynomials, and Reed-Solomon
//! evaluation-map encoding with a symbol-erasure decoder.

mod code;
mod field;
mod poly;

pub use code::{encode, erasure_decode, CodeParams};
pub use field::{FieldContext, Gf};
pub use poly::{lagrange_interpolate, Poly};
