//! Star-cover (`θ_S`) and distance-3 packing (`α_S`) numbers of small
//! graphs, together with the chordal and sun machinery needed to decide
//! S-perfection and to explore which induced structures break it.
//!
//! Graphs have at most 64 vertices; exhaustive procedures carry tighter
//! size guards of their own.

pub mod chordal;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod hamilton;
pub mod perfection;
pub mod solvers;
pub mod sun;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use families::FamilySpec;
pub use formats::{from_edge_list, from_graph6, to_dot, to_edge_list, to_graph6};
pub use solvers::{alpha_s, theta_s};
pub use sun::{ParityFilter, SpokeRule};
