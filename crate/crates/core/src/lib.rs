//! Resistance-distance and degree-based topological indices of graphs, with
//! exact rational arithmetic on trees and unicyclic graphs.
//!
//! The crate also provides three rewrites of unicyclic graphs that strictly
//! increase the reciprocal degree resistance distance index
//! `RDR(G) = Σ (d(u) + d(v)) / r(u, v)`, an isomorphism-free enumerator of
//! unicyclic graphs, and the exhaustive sweep confirming that `S_n^3` (a
//! triangle with `n - 3` pendants on one vertex) is the unique maximizer.
//!
//! ```
//! use rdr::{graph::Graph, indices::rdr_exact, rational::ratio};
//!
//! let triangle_with_pendant =
//!     Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
//! assert_eq!(rdr_exact(&triangle_with_pendant).unwrap(), ratio(143, 5));
//! ```


pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod indices;
pub mod rational;
pub mod resistance;
pub mod transforms;
