//! Exact inertia of simple graphs, the G_n / B_k families, congruent-vertex
//! transformations, and an exhaustive census of graphs with exactly two
//! positive eigenvalues.

pub mod canon;
pub mod census;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod transforms;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub use error::{Error, Result};
pub use families::{build_bk, build_gn, canonical_graph, format_bk, lex_product, parse_bk, BkSpec};
pub use graph::{Graph, VertexId};
pub use graph6::{from_graph6, to_graph6};
pub use spectral::{eigenvalues, inertia, Inertia, Spectrum};
