//! Short rainbow cycles in edge-colored graphs.
//!
//! An edge coloring here is a sequence of pairwise disjoint color classes, each
//! one a single edge, a matching of size two, a triangle, or an arbitrary edge
//! set. A cycle is *rainbow* when no two of its edges share a color, and the
//! rainbow girth is the length of a shortest rainbow cycle.
//!
//! The crate provides:
//!
//! - [`graph`]: the validated [`ColoredGraph`] container and rainbow certificates,
//! - [`instance`]: the line-based instance file format,
//! - [`generators`]: extremal constructions and seeded random mixed instances,
//! - [`oracle`]: exact girth and exact rainbow girth for small instances,
//! - [`sparse_cycle`]: the sparse-graph girth bound and an exact short-cycle finder,
//! - [`bounds`]: feasibility of the sampling parameters and the matching threshold,
//! - [`finders`]: the randomized and deterministic short-rainbow-cycle finders,
//! - [`harness`]: seeded experiment runners emitting CSV.

pub mod bounds;
pub mod error;
pub mod finders;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod oracle;
pub mod rng;
pub mod sparse_cycle;

pub use error::{Error, Result};
pub use graph::{ClassKind, ColorClass, ColorId, ColoredGraph, CycleResult, Edge};
