//! Enumeration and verification: the B_k classification, the D* catalog,
//! the brute-force labeled-graph oracle and the checks built on them.

pub mod compositions;
pub mod disconnected;
pub mod dstar;
pub mod forbidden;
pub mod oracle;
pub mod report;
pub mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{build_bk, BkSpec};
use crate::graph::{bit, bits, Graph};
use crate::spectral::{inertia, Inertia};

pub use compositions::compositions;
pub use disconnected::disconnected_gs;
pub use dstar::{compute_dstar, DStarCatalog, DStarEntry};
pub use forbidden::{forbidden_catalog, ForbiddenGraph};
pub use oracle::{oracle_census, CensusRecord};
pub use report::Report;

/// Position of λ_3 (and λ_4) relative to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// λ_3 > 0, i.e. p ≥ 3.
    Plus,
    /// λ_3 = λ_4 = 0.
    DoubleZero,
    /// λ_4 < λ_3 = 0.
    SingleZero,
    /// λ_3 < 0.
    Minus,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 4] = [
        ClassLabel::Plus,
        ClassLabel::DoubleZero,
        ClassLabel::SingleZero,
        ClassLabel::Minus,
    ];

    /// Reads the label off an exact inertia. With p = 2 this is: DoubleZero
    /// iff η ≥ 2, SingleZero iff η = 1, Minus iff η = 0.
    pub fn from_inertia(i: Inertia) -> ClassLabel {
        if i.p >= 3 {
            ClassLabel::Plus
        } else if i.p + i.eta >= 4 {
            ClassLabel::DoubleZero
        } else if i.p + i.eta == 3 {
            ClassLabel::SingleZero
        } else {
            ClassLabel::Minus
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Plus => "plus",
            ClassLabel::DoubleZero => "double_zero",
            ClassLabel::SingleZero => "single_zero",
            ClassLabel::Minus => "minus",
        }
    }
}

/// Smallest and largest k for which B_k is classified.
pub const CLASSIFY_K: std::ops::RangeInclusive<usize> = 4..=14;

/// Builds B_k(parts) and labels it from its exact inertia.
pub fn classify_bk(spec: &BkSpec) -> Result<ClassLabel> {
    Ok(classify_bk_with_inertia(spec)?.0)
}

pub fn classify_bk_with_inertia(spec: &BkSpec) -> Result<(ClassLabel, Inertia)> {
    if !CLASSIFY_K.contains(&spec.k()) {
        return Err(Error::InvalidParameter(format!(
            "classification covers 4 <= k <= 14, got k = {}",
            spec.k()
        )));
    }
    let i = inertia(&build_bk(spec)?);
    Ok((ClassLabel::from_inertia(i), i))
}

/// Part sizes of the complete multipartite graph induced on the non-isolated
/// vertices, sorted descending, or `None` if that subgraph is not complete
/// multipartite. An edgeless graph gives `Some(vec![])`.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let mut rest = g.vertex_mask() & !g.isolated_mask();
    let mut parts = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let part = rest & !g.row(v);
        if bits(part).any(|u| g.row(u) != g.row(v)) {
            return None;
        }
        // The rest of the support must be fully joined to the part.
        if (rest & !part) & !g.row(v) != 0 {
            return None;
        }
        parts.push(part.count_ones() as usize);
        rest &= !part;
    }
    // A single part with no edges cannot occur: its vertices would be isolated.
    debug_assert!(parts.len() != 1);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(parts)
}

/// Every labeled graph on `n` vertices, indexed by the bits of the upper
/// triangle in graph6 order.
pub(crate) fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << k) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(rows)
}

pub(crate) fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, disjoint_union, path};

    #[test]
    fn labels() {
        assert_eq!(ClassLabel::from_inertia(Inertia::new(3, 3, 0)), ClassLabel::Plus);
        assert_eq!(ClassLabel::from_inertia(Inertia::new(2, 10, 2)), ClassLabel::DoubleZero);
        assert_eq!(ClassLabel::from_inertia(Inertia::new(2, 5, 1)), ClassLabel::SingleZero);
        assert_eq!(ClassLabel::from_inertia(Inertia::new(2, 2, 0)), ClassLabel::Minus);
    }

    #[test]
    fn classify_examples() {
        let ones: BkSpec = BkSpec::new(vec![1; 14]).unwrap();
        assert_eq!(classify_bk(&ones).unwrap(), ClassLabel::DoubleZero);
        assert_eq!(
            classify_bk(&"B4(1,1;1,1)".parse().unwrap()).unwrap(),
            ClassLabel::Minus
        );
        assert_eq!(
            classify_bk(&"B6(4,3,3;2,1,1)".parse().unwrap()).unwrap(),
            ClassLabel::DoubleZero
        );
        assert!(classify_bk(&"B3(1;1;1)".parse().unwrap()).is_err());
        assert!(classify_bk(&BkSpec::new(vec![1; 15]).unwrap()).is_err());
    }

    #[test]
    fn multipartite_shapes() {
        let g = disjoint_union(
            &complete_multipartite(&[1, 2, 3]).unwrap(),
            &Graph::empty(2).unwrap(),
        )
        .unwrap();
        assert_eq!(multipartite_parts(&g), Some(vec![3, 2, 1]));
        assert_eq!(multipartite_parts(&complete(4).unwrap()), Some(vec![1; 4]));
        assert_eq!(multipartite_parts(&path(4).unwrap()), None);
        assert_eq!(multipartite_parts(&Graph::empty(3).unwrap()), Some(vec![]));
        let k2 = complete(2).unwrap();
        assert_eq!(multipartite_parts(&disjoint_union(&k2, &k2).unwrap()), None);
    }

    #[test]
    fn labeled_graph_indexing() {
        assert_eq!(labeled_count(4), 64);
        let g = labeled_graph(3, 0b101);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }
}
