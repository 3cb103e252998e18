//! A toolkit for star, degenerate and degenerate-star graph colorings.
//!
//! The crate is organized around one pipeline and the exact checkers that
//! keep it honest:
//!
//! * [`graph`]: simple undirected graphs and the local edits (deletion,
//!   degree-2 suppression, edge contraction) every other module builds on.
//! * [`coloring`]: vertex colorings and per-vertex admissible-color lists.
//! * [`verify`]: witness-producing verdicts for proper, acyclic, star,
//!   degenerate, degenerate-star and distance-two colorings.
//! * [`orient`]: the orientation characterization of star colorings
//!   (every class pair induces a star forest; roots are tails).
//! * [`oracle`]: brute-force exact chromatic numbers for small graphs,
//!   used as ground truth everywhere else.
//! * [`embedding`]: rotation systems, face tracing and Euler genus.
//! * [`lll`]: a resampling colorer for bounded-degree graphs together with
//!   a numeric check of the local-lemma condition behind its palette size.
//! * [`reduce`]: the bounded-genus pipeline: reduce to an irreducible core,
//!   color the core, extend back through the reduction trace.
//! * [`discharge`]: an exact-rational auditor for the charge argument on
//!   embedded irreducible graphs.
//! * [`lowerbound`]: random-graph experiments around family-free colorings.
//!
//! Randomized entry points take explicit RNGs or seeds; identical inputs and
//! seeds give identical outputs.

pub mod coloring;
pub mod discharge;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod lll;
pub mod lowerbound;
pub mod oracle;
pub mod orient;
pub mod reduce;
pub mod verify;

pub use coloring::{ColorList, Coloring, ListAssignment};
pub use graph::{Graph, GraphError, VertexMap};
pub use verify::{Status, Verdict, Witness};
