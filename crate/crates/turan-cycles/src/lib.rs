//! Exact experimentation toolkit for generalized Turán problems on odd
//! cycles.
//!
//! The crate counts homomorphisms and embeddings of small patterns into
//! graphs of at most 64 vertices, builds the classical extremal
//! constructions (Turán graphs, blowups), enumerates small graphs up to
//! isomorphism, and runs exhaustive degree-stability, vertex-extendability,
//! and edge-stability scans at desk scale. All counts are exact 64-bit
//! integers with overflow detection, and all ratios are exact rationals.
//!
//! Start from the runnable examples:
//!
//! ```bash
//! cargo run --release --example counting
//! cargo run --release --example stability_scan
//! ```
//!
//! or from the library surface:
//!
//! ```
//! use turan_cycles::{count_inj, Graph, Pattern};
//!
//! let pentagon = Pattern::new(Graph::cycle(5).unwrap()).unwrap();
//! let host = Graph::turan(6, 3).unwrap();
//! assert_eq!(count_inj(&pentagon, &host).unwrap(), 240);
//! ```

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod experiments;
pub mod expr;
pub mod graph;
pub mod hom;
pub mod io;
pub mod ratio;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{all_graphs, all_graphs_filtered, all_labeled_graphs, random_graphs, GraphStream};
pub use experiments::{
    degree_stability_scan, edge_stability_measure, extremal_search, turan_degree_reference,
    vertex_extendability_check, vertex_extendability_scan,
};
pub use graph::{Graph, GraphError, PartSpec, MAX_VERTICES};
pub use hom::{
    contains, copy_count, count_hom, count_inj, degree_profile, edit_distance_to_colorable,
    is_colorable, is_free, DegreeProfile, EditDistance, HomError, Pattern, DEFAULT_EDIT_BUDGET,
};
pub use ratio::Rat;
