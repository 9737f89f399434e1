//! Connected triangle matchings in edge-colored complete graphs.
//!
//! A *triangle matching* `nK3` is a set of `n` pairwise vertex-disjoint
//! triangles; a *connected* triangle matching `c(nK3)` additionally asks for
//! all of them to sit inside one connected component of their color class.
//! This crate turns the counting arguments behind the Ramsey thresholds for
//! `c(nK3)` into executable witness extraction:
//!
//! - [`graph`]: edge-colored complete graphs, components, exact maximum
//!   matching, white-degree profiles.
//! - [`packing`]: triangle matchings, connected-triangle-matching witnesses,
//!   an independent brute-force oracle, and the monochromatic `nK3` finders.
//! - [`extraction`]: the constructive core. Given a 2-coloring at or above
//!   the threshold `7n - 2` (or its perturbed variant with up to `t - 1`
//!   missing edges per vertex), produces a verifier-approved monochromatic
//!   `c(nK3)` together with a trace of the argument branch that built it.
//! - [`extremal`]: generators for the matching lower-bound colorings and a
//!   structural certifier that scales past the oracle.
//! - [`router`]: almost-square-paths of prescribed length through a complete
//!   tripartite graph.
//!
//! Everything is deterministic: vertex ids are `0`-based, set outputs are
//! sorted, and greedy choices always take the lowest admissible id.

pub mod error;
pub mod extraction;
pub mod extremal;
pub mod graph;
pub mod packing;
pub mod router;

mod blossom;

pub use error::{Error, GraphError, Result};
pub use extraction::{
    extract_ctm, extract_ctm_perturbed, extract_triples_vs_matching,
    extract_triples_vs_matching_perturbed, mono_connected_component, ExtractionTrace, Regime,
    TraceParams, TriplesOrMatching,
};
pub use extremal::{
    gen_affine4, gen_ctm_lower_bound, gen_triples_vs_matching_sharp,
    verify_ctm_lower_bound_structurally, ExtremalKind, ExtremalSpec, FourColoredGraph,
};
pub use graph::{
    Color, ColoredGraph, ComponentDecomposition, Matching, WhiteDegreeProfile, MAX_VERTICES,
};
pub use packing::{
    find_mono_triangle_matching, find_mono_triangle_matching_perturbed, has_connected_matching,
    oracle_has_ctm, verify_ctm, CtmWitness, TriangleMatching, Violation,
};
pub use router::{route_square_path, SquarePathRoute};
