//! Exact computations for Borel-Weil-Bott cohomology on flag varieties and the
//! deformation theory of codimension-one regular semisimple Hessenberg varieties.
//!
//! All arithmetic is exact: weights and roots are integer vectors, dimensions
//! are arbitrary-precision integers and type-A configurations are rationals.

pub mod bwb;
pub mod error;
pub mod filtered;
pub mod rootsys;
pub mod symcoh;
pub mod typea;

pub use error::{Error, Result};
