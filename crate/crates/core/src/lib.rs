//! Exact path connectivity and Steiner packing parameters on small graphs.
//!
//! The crate computes the classical cut parameters (connectivity, edge
//! connectivity, the cut version of k-connectivity), the packing parameters
//! `pi`, `omega`, `kappa` and `lambda` for terminal sets and their global
//! minima, the explicit disjoint-path families for Cartesian products of
//! complete graphs, and a set of verification suites that check known
//! identities and inequalities between those parameters.
//!
//! ```
//! use pathconn::graph::{generate, Family};
//! use pathconn::steiner::{global_connectivity, SolverOptions, Variant};
//!
//! let k6 = generate(Family::Complete(6)).unwrap();
//! let res = global_connectivity(&k6, 3, Variant::Pi, &SolverOptions::default()).unwrap();
//! assert_eq!(res.value, 3);
//! ```

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod steiner;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
