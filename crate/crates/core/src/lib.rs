//! Distance-based topological indices of graphs, with a focus on cacti.
//!
//! The crate computes the Wiener, Szeged, edge-Szeged and edge-vertex-Szeged
//! indices, implements four rewrites that strictly lower the edge-Szeged and
//! edge-vertex-Szeged indices of a cactus while keeping its order and number
//! of cycles, and checks by exhaustive enumeration that the bundle of `k`
//! triangles with pendant edges at the hub is the unique minimiser of both.
//!
//! The edge-vertex-Szeged index can be half-integral, so it is carried
//! everywhere as twice its value (`sz_ev_x2`).
//!
//! ```
//! use szcactus::extremal::{verify_theorem, DEFAULT_CEILING};
//! use szcactus::transform::normalize_to_extremal;
//! use szcactus::{compute_indices, Graph};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let c5 = Graph::cycle(5);
//! let r = compute_indices(&c5)?;
//! assert_eq!((r.edge_szeged, r.edge_vertex_szeged_x2), (20, 40));
//!
//! let out = normalize_to_extremal(&c5)?;
//! assert_eq!(out.steps.len(), 1);
//!
//! let report = verify_theorem(7, 2, DEFAULT_CEILING)?;
//! assert!(report.passed());
//! # Ok(())
//! # }
//! ```

pub mod cactus;
pub mod cycle;
pub mod extremal;
pub mod generate;
pub mod graph;
pub mod io;
pub mod szeged;
pub mod transform;

pub use graph::{Distance, Edge, Graph, GraphError};
pub use szeged::{compute_indices, IndexPair, IndexReport};
