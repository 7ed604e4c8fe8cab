//! Exact arithmetic: integers, rationals, polynomials, the scalar field,
//! series in the spectral parameter, and the equivariant character ring.

pub mod charpoly;
pub mod gcd;
pub mod int;
pub mod lin;
pub mod modp;
pub mod mono;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod scalar;
pub mod series;

pub use charpoly::{CharError, CharMono, CharPoly};
pub use int::Int;
pub use lin::Lin;
pub use mono::{Mono, Var};
pub use parse::{parse_scalar, ParseError};
pub use poly::Poly;
pub use rat::Rat;
pub use roots::LinRoots;
pub use scalar::{Scalar, ScalarError};
pub use series::{RationalU, SeriesU, SplitU};
