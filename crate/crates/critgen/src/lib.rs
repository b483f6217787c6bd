//! Exhaustive generation and certification of k-vertex-critical graphs in
//! hereditary classes defined by forbidden induced subgraphs, together with
//! the structural machinery used to reason about them: exact coloring,
//! list-coloring propagation, canonical forms, clique cutsets, and the
//! vertex taxonomies around a 5-hole and a 7-antihole.

pub mod canon;
pub mod catalog;
pub mod coloring;
pub mod criticality;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod induced;
pub mod sampling;
pub mod structure;

pub use canon::{are_isomorphic, canonical_form, CanonicalKey, KeyStore};
pub use coloring::{
    chromatic_number, is_k_colorable, is_proper_coloring, propagate_exhaustive, propagate_once,
    solve_list_coloring, Coloring, ListAssignment,
};
pub use criticality::{
    find_dominated_pair, find_dominated_subsets, has_clique_cutset, is_k_vertex_critical,
    CriticalityCertificate,
};
pub use generate::{
    generate, one_vertex_extensions, GenerationConfig, GenerationError, GenerationReport,
    GenerationStatus, PruneFlags,
};
pub use graph::{Graph, GraphError, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use induced::{find_induced, is_free, Embedding};
pub use structure::{
    check_antihole7_claims, check_c5_claims, classify_antihole7, classify_c5,
    four_color_via_antihole, Antihole7Context, C5Context, ClaimReport, StructureError, Witness,
};
