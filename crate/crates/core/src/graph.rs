//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; each adjacency row is a single `u64`.
pub const MAX_ORDER: usize = 64;

/// Index of a vertex. Only meaningful relative to the graph it came from.
pub type VertexId = usize;

/// Single-vertex mask.
#[inline]
pub fn bit(v: VertexId) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
pub fn bits(mut word: u64) -> impl Iterator<Item = VertexId> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let v = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph.
///
/// Rows are kept symmetric and irreflexive by every constructor; there is no
/// way to build an asymmetric value through the public API.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow { order });
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are harmless.
    pub fn from_edges(order: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry, irreflexivity and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow { order });
        }
        let mask = low_mask(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    order,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::Loop { vertex: v });
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { order, adj: rows })
    }

    /// Rows are trusted to be valid. Used by hot enumeration loops.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            order: rows.len(),
            adj: rows,
        }
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::Loop { vertex: u });
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbor bitset of `v`.
    pub fn row(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> {
        bits(self.adj[v])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order && v < self.order && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    /// Vertices of degree zero, as a bitset.
    pub fn isolated_mask(&self) -> u64 {
        self.vertices()
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |m, v| m | bit(v))
    }

    /// Connectivity in the usual sense; the graph on zero vertices counts as
    /// connected, K_1 as well.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        self.component_of(0) == self.vertex_mask()
    }

    /// Bitset of the connected component containing `v`.
    pub fn component_of(&self, v: VertexId) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as bitsets, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Induced subgraph on the vertex set `keep`, relabelled by ascending
    /// original index.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in keep {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            mask |= bit(v);
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Same as [`Graph::induced_subgraph`] with the kept set given as a bitset.
    /// Bits at or above the order are ignored.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let kept: Vec<VertexId> = bits(mask).collect();
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let rows = kept
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0, |r, u| r | bit(pos[u])))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// The graph with vertex `v` deleted.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !bit(v)))
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permuted(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::LengthMismatch {
                expected: self.order,
                found: perm.len(),
            });
        }
        let mut inv = vec![usize::MAX; self.order];
        for (i, &v) in perm.iter().enumerate() {
            if v >= self.order || inv[v] != usize::MAX {
                return Err(Error::NotAPermutation);
            }
            inv[v] = i;
        }
        let rows = perm
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0, |r, u| r | bit(inv[u])))
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let rows = self
            .vertices()
            .map(|v| !self.adj[v] & mask & !bit(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Adds a new vertex whose neighborhood is `nbrs`.
    pub fn with_vertex(&self, nbrs: u64) -> Result<Graph> {
        let n = self.order;
        if n + 1 > MAX_ORDER {
            return Err(Error::OrderOverflow { order: n + 1 });
        }
        let nbrs = nbrs & self.vertex_mask();
        let mut rows = self.adj.clone();
        for u in bits(nbrs) {
            rows[u] |= bit(n);
        }
        rows.push(nbrs);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        self.vertices()
            .map(|u| {
                self.vertices()
                    .map(|v| i64::from(self.has_edge(u, v)))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n });
    }
    let mask = low_mask(n);
    Ok(Graph::from_rows_unchecked(
        (0..n).map(|v| mask & !bit(v)).collect(),
    ))
}

/// Path P_n on vertices 0..n with consecutive edges.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Complete multipartite graph with the given part sizes, parts laid out on
/// consecutive vertices. A single part gives isolated vertices.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("no parts given".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be positive".into()));
    }
    let n: usize = parts.iter().sum();
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n });
    }
    let full = low_mask(n);
    let mut rows = Vec::with_capacity(n);
    let mut start = 0;
    for &size in parts {
        let part = low_mask(start + size) & !low_mask(start);
        rows.extend(std::iter::repeat_n(full & !part, size));
        start += size;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Disjoint union G + H; H's vertices follow G's.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.order + h.order;
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n });
    }
    let shift = g.order;
    let rows = g
        .adj
        .iter()
        .copied()
        .chain(h.adj.iter().map(|&r| r << shift))
        .collect();
    Ok(Graph::from_rows_unchecked(rows))
}
