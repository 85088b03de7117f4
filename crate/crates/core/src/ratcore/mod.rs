//! Exact arithmetic kernel: rationals, polynomials and rational functions in
//! y = ωr²/2, plus Sturm root counting.

mod poly;
mod ratfun;
mod scalar;
pub mod serial;
mod sturm;

pub use poly::YPoly;
pub use ratfun::YRatFun;
pub use scalar::{format_scalar, frac, half, int, is_integer_valued, parse_scalar, pow, to_f64, Scalar};
pub use sturm::{positive_root_count, sturm_count, Bound};
