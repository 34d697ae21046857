//! Exact arithmetic: rationals, integer linear forms in `u, v, w`, factored
//! products of linear forms, sparse Laurent polynomials and truncated power
//! series.

mod factored;
mod laurent;
mod linear;
mod series;

pub use factored::{FactoredForm, Sign};
pub use laurent::{Exponent, LaurentPoly};
pub use linear::{lf_canonicalize, LinearForm, ScaledForm};
pub use series::{macmahon_series, PowerSeries};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// A point `(u, v, w)` at which factored forms are evaluated.
pub type Point = [Rational; 3];

/// Builds an integer point.
pub fn int_point(u: i64, v: i64, w: i64) -> Point {
    [u, v, w].map(|x| Rational::from_integer(x.into()))
}
