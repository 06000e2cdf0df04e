//! Decorated quivers of Fano lattice polygons.
//!
//! Polygons live in [`lattice2d`], abstract quivers in [`quiver`], the
//! dictionary between them in [`polygonal`], and the inverse problem in
//! [`reconstruction`]. [`complex3`] covers the three-dimensional block complex,
//! [`invariants`] bundles the identities checked over whole corpora, and
//! [`cli`] backs the `fanoq` binary.

pub mod cli;
pub mod complex3;
pub mod error;
pub mod invariants;
pub mod lattice2d;
pub mod polygonal;
pub mod quiver;
pub mod reconstruction;

pub use error::{Error, Result};

use num_rational::Rational64;

/// Serializes a rational as `"p/q"`, or `"p"` when integral.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}
