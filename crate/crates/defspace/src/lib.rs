//! Combinatorics of large-type Artin defining graphs: chunk decompositions,
//! quotient-level visual splittings, deformation spines under
//! collapse/expansion/slide moves, twist-equivalent defining graphs, and
//! RAAG presentations of the twist groups stabilizing reduced splittings.
//!
//! Everything is exact and deterministic: graphs are tiny, values are
//! immutable, and every operation is a pure function, so results are safe
//! to compute from concurrent contexts and identical across runs.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── chunk_decomposition.rs      # separating simplices and chunks
//! ├── canonical_splitting.rs      # the canonical chunk tree and its variants
//! ├── deformation_moves.rs        # collapse / expand / slide, receipts
//! ├── spine_walkthrough.rs        # enumerating classes, slide graph, dimension
//! ├── twist_orbit.rs              # twist-equivalent defining graphs
//! ├── stabilizer_presentation.rs  # twist-group RAAG presentations
//! └── dot_export.rs               # graphviz renderings
//! ```
//!
//! ```bash
//! cargo run -p defspace --example chunk_decomposition
//! cargo run -p defspace --example spine_walkthrough
//! ```
//!
//! ## A taste
//!
//! ```
//! use defspace::graph::DefiningGraph;
//! use defspace::chunks::chunks;
//! use defspace::splitting::canonical_chunk_tree;
//!
//! let g = DefiningGraph::parse("edge a b 3\nedge b c 3").unwrap();
//! let ch = chunks(&g).unwrap();
//! assert_eq!(ch.len(), 2); // {a,b} and {b,c}
//!
//! let tree = canonical_chunk_tree(&g).unwrap();
//! assert!(tree.validate().valid_chunk_tree);
//! assert_eq!(tree.node_count(), 2);
//! ```
//!
//! ## Module map
//!
//! - [`graph`]: the `.adg` format, classification flags, odd-edge
//!   reachability.
//! - [`canon`]: canonical codes for labeled graphs.
//! - [`chunks`]: separating vertices/edges and the chunk decomposition.
//! - [`splitting`]: splitting trees over a base graph, validation, the
//!   canonical construction, tree codes.
//! - [`moves`]: collapse/expansion/slide, reduced and surviving status,
//!   exhaustive enumeration, the spine report.
//! - [`twist`]: twist moves and orbits, dihedral outer automorphism types,
//!   stabilizer presentations.
//! - [`report`]: aggregated JSON reports backing the `defspace` binary.
//! - [`dot`]: graphviz export.
//!
//! A thin CLI (`defspace`) exposes one subcommand per computation; see the
//! README for the verbs, flags and exit codes.

pub mod canon;
pub mod chunks;
pub mod dot;
pub mod error;
pub mod graph;
pub mod moves;
pub mod report;
pub mod splitting;
pub mod twist;

pub use canon::CanonicalCode;
pub use error::{Error, Result};
pub use graph::{ClassFlags, DefiningGraph, Vertex, VertexSet};
pub use splitting::{LabelKind, SplittingTree, Verdict, Violation};
