use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {order} exceeds the 64-vertex limit")]
    OrderOverflow { order: usize },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },

    #[error("adjacency is not symmetric at ({u}, {v})")]
    Asymmetric { u: usize, v: usize },

    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation")]
    NotAPermutation,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    Graph6Char { offset: usize, byte: u8 },

    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },

    #[error("graph6: empty input")]
    Graph6Empty,

    #[error("cannot parse B_k name {text:?}: {reason}")]
    BkSyntax { text: String, reason: String },

    #[error("stale finding: {0}")]
    StaleFinding(String),

    #[error("inertia law violated: {before} -> {after} after deleting vertex {vertex}")]
    InertiaLaw {
        before: crate::spectral::Inertia,
        after: crate::spectral::Inertia,
        vertex: usize,
    },
}
