//! Bounded-delay enumeration of graph orientations.
//!
//! Given a loopless multigraph this crate lists, each exactly once:
//!
//! * the orientations with a prescribed outdegree at every vertex
//!   ([`enumerate_alpha`]),
//! * the outdegree sequences attained by k-arc-connected orientations
//!   ([`enumerate_outdegree_sequences`]),
//! * the k-arc-connected orientations themselves ([`enumerate_k_connected`]).
//!
//! All enumerators push solutions into a closure as they are found. The
//! `_metered` variants also feed a [`DelayMeter`] that counts abstract
//! operations between consecutive solutions. Brute-force references live in
//! [`oracle`].
//!
//! ```
//! use korient::{enumerate_k_connected, Multigraph};
//!
//! let g: Multigraph = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3".parse().unwrap();
//! let strong = enumerate_k_connected(&g, 1, |_| {}).unwrap();
//! assert_eq!(strong, 24);
//! ```

pub mod alpha;
pub mod connected;
pub mod error;
pub mod graph;
pub mod meter;
pub mod oracle;
pub mod paths;
pub mod sequences;

pub use alpha::{
    enumerate_alpha, enumerate_alpha_metered, enumerate_class_of, find_alpha_orientation,
    same_alpha_cycle_decomposition, DirectedCycle,
};
pub use connected::{
    class_size_lower_bound, class_size_lower_bound_check, enumerate_connected_sequences,
    enumerate_k_connected, enumerate_k_connected_from, enumerate_k_connected_metered,
    find_k_connected_orientation,
};
pub use error::{Error, Result};
pub use graph::{CutSet, DegreeSequence, Multigraph, Orientation};
pub use meter::{DelayMeter, OpCounts};
pub use paths::{
    find_directed_path, is_flippable_pair, lambda_at_least, local_arc_connectivity, reverse_path, Arc,
    DirectedPath,
};
pub use sequences::{enumerate_outdegree_sequences, enumerate_outdegree_sequences_metered};
