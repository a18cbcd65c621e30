//! Exact extremal numbers for intersection graphs of axis-parallel boxes.
//!
//! `T(n, k, d)` is the largest number of intersecting pairs among `n` closed
//! boxes in `R^d` when no point lies in more than `k` of them. This crate
//! evaluates it in closed form ([`turan`]), builds families that attain it
//! ([`extremal`]), certifies the matching upper bound on concrete inputs
//! ([`extremal::decompose_certificate`]) and cross-checks everything against
//! brute force ([`oracle`]). The [`helly`] and [`regularity`] modules cover
//! the fractional Helly consequences.
//!
//! All coordinates are `i64` and all arithmetic is exact.

pub mod acceptance;
pub mod error;
pub mod extremal;
pub mod family;
pub mod geometry;
pub mod graph;
pub mod helly;
pub mod oracle;
pub mod par;
pub mod regularity;
pub mod sample;
pub mod turan;

pub use error::{Error, Result};
pub use family::{parse_family, serialize_family, BoxFamily, BoxNd, Interval};
pub use geometry::{depth, intersection_graph, DepthCertificate};
pub use graph::IntersectionGraph;
pub use par::Mode;

/// Exact rational used for densities, gaps and thresholds.
pub type Rational = num_rational::Ratio<i128>;
