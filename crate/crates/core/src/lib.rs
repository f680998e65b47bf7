//! Exact computation of the general position number and its total, outer
//! and dual variants on finite connected graphs.
//!
//! Every solver returns a [`position::Certificate`] whose witness set can be
//! re-checked against the definitions, and [`position::brute_force`] provides
//! an exhaustive baseline that uses no structural shortcuts. The [`laws`]
//! module replays the known structural results on generated instances.

pub mod error;
pub mod generators;
pub mod graph;
pub mod laws;
pub mod metric;
pub mod position;
pub mod srg;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use metric::DistMatrix;
pub use position::{Certificate, Method, Variant};
