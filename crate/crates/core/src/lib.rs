//! Plane-graph analysis: rotation systems and face tracing, the counting
//! bounds relating triangles, faces and edges, constructive and exact
//! 3-coloring, 4-criticality certificates, and exhaustive verification over
//! small enumerated graphs and their plane embeddings.

pub mod bounds;
pub mod coloring;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod rational;
pub mod report;
pub mod structure;
pub mod verify;

pub use bounds::{
    contradiction_report, edge_upper_bound, face_count_bound, ky_lower_bound, theorem4_verdict, BoundChain,
    ContradictionRegime, ContradictionReport, FaceCountBound, Theorem4Verdict,
};
pub use coloring::{
    exact_k_color, greedy_color_from_peel, is_4_critical, peel_order, verify_coloring, Coloring,
    CriticalityCertificate, ExactOutcome, PeelTrace, DEFAULT_BUDGET,
};
pub use embedding::{build_plane_graph, counts, trace_faces, Dart, FaceSet, GraphCounts, PlaneGraph, RotationSystem};
pub use enumerate::{canonical_form, enumerate_embeddings, enumerate_small_graphs, find_plane_embedding, CorpusFilter};
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use structure::{
    adjacent_triangles_exist, count_triangles, forbidden_cycle_scan, has_cycle_of_length, StructureReport,
};
