//! Exact arithmetic kernels: big integers and rationals, Gaussian rationals,
//! the golden-ratio ring, dense polynomials, Laurent polynomials, truncated
//! power series and small dense matrices.

mod gaussian;
mod laurent;
mod matrix;
mod poly;
mod quadint;
mod ring;
mod series;

pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use poly::{IntPoly, Poly, RatPoly};
pub use quadint::QuadInt;
pub use ring::{int, rat, to_integer, Field, Integer, Rational, Ring};
pub use series::TruncSeries;
