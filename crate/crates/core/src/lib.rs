//! Exact computational machinery for valuated matroids and valuated flag
//! matroids: min-plus arithmetic over the rationals, exact polyhedral
//! geometry, matroids given by basis lists, Plücker vectors, regular
//! subdivisions of base configurations, and a tropical prevariety fan
//! engine.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere. Every value is immutable after construction and
//! safe to share across threads.

pub mod error;
pub mod flag;
pub mod linalg;
pub mod lp;
pub mod matroid;
pub mod polyhedral;
pub mod prevariety;
pub mod sample;
pub mod subdivision;
pub mod trop;
pub mod valuated;

pub use error::Error;
pub use trop::{Rat, TropRat};

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
