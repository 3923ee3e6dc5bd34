//! Exact monochromatic disconnection numbers for small graphs.
//!
//! An edge-coloring is an *MD-coloring* when every pair of vertices is
//! separated by removing the edges of a single color; `md(G)` is the largest
//! number of colors such a coloring can use. This crate computes `md(G)`
//! exactly with certificates, builds the extremal graph families and product
//! colorings around it, and checks the known threshold and product results
//! by exhaustive enumeration of small graphs.

pub mod analysis;
pub mod checks;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod products;
pub mod solver;
mod util;

pub use coloring::{is_md_coloring, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{from_graph6, to_graph6, Graph};
pub use solver::{md_exact, MdResult, SearchConfig};
