//! Exact computation of the Jack-Plancherel measure, the equivariant edge
//! measure on integer partitions and the equivariant vertex measure on plane
//! partitions, together with the sweeps that check the identities relating
//! them.
//!
//! Everything here is exact: values are canonical products of primitive
//! integer linear forms in `u, v, w` ([`FactoredForm`]), Laurent polynomials
//! with big-integer coefficients ([`LaurentPoly`]) and truncated power series
//! with rational coefficients ([`PowerSeries`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(missing_docs)]

extern crate alloc;

pub mod arith;
pub mod edge;
mod error;
pub mod partitions;
pub mod report;
pub mod vertex;

pub use arith::{
    lf_canonicalize, macmahon_series, FactoredForm, LaurentPoly, LinearForm, PowerSeries, Rational,
    ScaledForm, Sign,
};
pub use error::{Error, Result};
pub use partitions::{Cell, Coord, CornerData, Partition, PlanePartition};
pub use report::{Failure, Value, VerificationReport};
