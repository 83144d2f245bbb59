//! Canonical labeling by equitable-partition refinement and individualization.
//!
//! The search tree is the usual one: refine the unit partition, pick the
//! first non-singleton cell, individualize each of its vertices in turn and
//! recurse. Every leaf is a vertex ordering; the canonical form is the least
//! adjacency string among the leaves. Two prunings keep highly symmetric
//! inputs cheap:
//!
//! * vertices of a target cell that are twins (equal open or closed
//!   neighborhoods) of an already explored sibling are skipped, since the
//!   transposition swapping them is an automorphism fixing the current prefix;
//! * automorphisms discovered as coinciding leaves are kept, and siblings in
//!   the same orbit under those automorphisms fixing the prefix are skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, bits, Graph, VertexId};

/// Order-prefixed, bit-packed upper triangle of the adjacency matrix under
/// the canonical ordering. Equal forms mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Order of the graph this form describes.
    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds the canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Adjacency string of `g` under `order` (position -> vertex), packed with
/// the order byte in front. Column-major over the upper triangle, like graph6.
pub(crate) fn labelled_string(g: &Graph, order: &[VertexId]) -> Vec<u8> {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; 1 + nbits.div_ceil(8)];
    out[0] = n as u8;
    let mut k = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &vi in &order[..j] {
            if row & bit(vi) != 0 {
                out[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

/// Ordered partition of the vertex set; each cell is a bitset.
type Partition = Vec<u64>;

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Splits are ordered by neighbor count, so the result depends only on the
/// isomorphism type of (graph, ordered partition).
fn refine(g: &Graph, cells: &mut Partition) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next: Partition = Vec::with_capacity(cells.len() + 4);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in bits(cell) {
                    let c = (g.row(v) & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                    groups.sort_unstable_by_key(|&(c, _)| c);
                }
                next.extend(groups.into_iter().map(|(_, m)| m));
            }
            *cells = next;
            w += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// For each vertex, the vertices it is a twin of (open or closed).
    twins: Vec<u64>,
    best: Option<(Vec<u8>, Vec<VertexId>)>,
    automorphisms: Vec<Vec<VertexId>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let mut twins = vec![0u64; n];
        for u in 0..n {
            for v in u + 1..n {
                let (ru, rv) = (g.row(u) & !bit(v), g.row(v) & !bit(u));
                if ru == rv {
                    twins[u] |= bit(v);
                    twins[v] |= bit(u);
                }
            }
        }
        Search {
            g,
            twins,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn visit(&mut self, cells: Partition, prefix: &mut Vec<VertexId>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        // Orbits of the cell under known automorphisms fixing the prefix.
        let fixing: Vec<usize> = (0..self.automorphisms.len())
            .filter(|&i| prefix.iter().all(|&p| self.automorphisms[i][p] == p))
            .collect();
        let mut explored = 0u64;
        for v in bits(cell) {
            if self.twins[v] & explored != 0 {
                continue;
            }
            if self.same_orbit(&fixing, explored, v) {
                continue;
            }
            explored |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
        }
    }

    /// True if `v` lies in the orbit of some explored vertex under the group
    /// generated by the automorphisms in `fixing`.
    fn same_orbit(&self, fixing: &[usize], explored: u64, v: VertexId) -> bool {
        if fixing.is_empty() || explored == 0 {
            return false;
        }
        let mut orbit = bit(v);
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                for &i in fixing {
                    next |= bit(self.automorphisms[i][u]);
                }
            }
            frontier = next & !orbit;
            orbit |= next;
            if orbit & explored != 0 {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &Partition) {
        let order: Vec<VertexId> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let s = labelled_string(self.g, &order);
        match &self.best {
            None => self.best = Some((s, order)),
            Some((best, best_order)) => {
                if s == *best {
                    let mut gamma = vec![0; order.len()];
                    for (i, &v) in best_order.iter().enumerate() {
                        gamma[v] = order[i];
                    }
                    self.automorphisms.push(gamma);
                } else if s < *best {
                    self.best = Some((s, order));
                }
            }
        }
    }
}

/// Canonical labeling: the ordering `perm` (position -> original vertex) and
/// the resulting form.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<VertexId>) {
    if g.order() == 0 {
        return (CanonicalForm(vec![0]), Vec::new());
    }
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut search = Search::new(g);
    search.visit(cells, &mut Vec::new());
    let (bytes, order) = search.best.expect("search reaches at least one leaf");
    (CanonicalForm(bytes), order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Isomorphism test. Cheap invariants (order, degree multiset, spectrum)
/// reject most non-isomorphic pairs before canonical forms are computed.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if g.order() > 1 {
        let sg = crate::spectral::eigenvalues(g, 1e-10).expect("positive tolerance");
        let sh = crate::spectral::eigenvalues(h, 1e-10).expect("positive tolerance");
        if sg
            .values
            .iter()
            .zip(&sh.values)
            .any(|(a, b)| (a - b).abs() > 1e-6)
        {
            return false;
        }
    }
    canonical_form(g) == canonical_form(h)
}
