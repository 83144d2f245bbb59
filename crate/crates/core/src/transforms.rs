//! Congruent vertices of I-, II- and III-type.
//!
//! Deleting such a vertex keeps p and n and lowers the nullity by one.
//! [`apply`] checks that law on every call and refuses to return a graph that
//! breaks it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexId};
use crate::graph6::to_graph6;
use crate::spectral::{inertia, Inertia};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TransformKind {
    TypeI,
    TypeII,
    TypeIII,
}

/// The neighborhood configuration certifying a congruent vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Witness {
    /// Non-adjacent u, v with N(u) = N(v).
    TypeI { u: VertexId, v: VertexId },
    /// v ≁ w with N(u) the disjoint union of N(v) and N(w).
    TypeII { u: VertexId, v: VertexId, w: VertexId },
    /// Induced quadrangle u–v–x–y whose edges uv and xy are congruent:
    /// N(u)∖{y,v} = N(v)∖{u,x} and N(x)∖{v,y} = N(y)∖{x,u}.
    TypeIII {
        u: VertexId,
        v: VertexId,
        x: VertexId,
        y: VertexId,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransformFinding {
    pub witness: Witness,
    /// The vertex whose deletion realizes the reduction.
    pub removable: VertexId,
}

impl TransformFinding {
    pub fn kind(&self) -> TransformKind {
        match self.witness {
            Witness::TypeI { .. } => TransformKind::TypeI,
            Witness::TypeII { .. } => TransformKind::TypeII,
            Witness::TypeIII { .. } => TransformKind::TypeIII,
        }
    }

    /// Re-checks the defining neighborhood equations against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let n = g.order();
        match self.witness {
            Witness::TypeI { u, v } => {
                u < n && v < n && u != v && self.removable == v && is_type1(g, u, v)
            }
            Witness::TypeII { u, v, w } => {
                u < n && v < n && w < n && self.removable == u && is_type2(g, u, v, w)
            }
            Witness::TypeIII { u, v, x, y } => {
                [u, v, x, y].iter().all(|&a| a < n) && self.removable == u && is_type3(g, u, v, x, y)
            }
        }
    }
}

impl fmt::Display for TransformFinding {
    /// Line format: `TYPE1 u v`, `TYPE2 u|v,w`, `TYPE3 u,v,x,y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            Witness::TypeI { u, v } => write!(f, "TYPE1 {u} {v}"),
            Witness::TypeII { u, v, w } => write!(f, "TYPE2 {u}|{v},{w}"),
            Witness::TypeIII { u, v, x, y } => write!(f, "TYPE3 {u},{v},{x},{y}"),
        }
    }
}

fn is_type1(g: &Graph, u: VertexId, v: VertexId) -> bool {
    !g.has_edge(u, v) && g.row(u) == g.row(v)
}

fn is_type2(g: &Graph, u: VertexId, v: VertexId, w: VertexId) -> bool {
    u != v
        && u != w
        && v != w
        && !g.has_edge(v, w)
        && g.row(v) & g.row(w) == 0
        && g.row(u) == g.row(v) | g.row(w)
}

fn is_type3(g: &Graph, u: VertexId, v: VertexId, x: VertexId, y: VertexId) -> bool {
    let distinct = u != v && u != x && u != y && v != x && v != y && x != y;
    distinct
        && g.has_edge(u, v)
        && g.has_edge(v, x)
        && g.has_edge(x, y)
        && g.has_edge(y, u)
        && !g.has_edge(u, x)
        && !g.has_edge(v, y)
        && g.row(u) & !(bit(y) | bit(v)) == g.row(v) & !(bit(u) | bit(x))
        && g.row(x) & !(bit(v) | bit(y)) == g.row(y) & !(bit(x) | bit(u))
}

/// All non-adjacent pairs u < v with equal neighborhoods; v is removable.
pub fn find_type1(g: &Graph) -> Vec<TransformFinding> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if is_type1(g, u, v) {
                out.push(TransformFinding {
                    witness: Witness::TypeI { u, v },
                    removable: v,
                });
            }
        }
    }
    out
}

/// All (u; v, w), v < w, with v ≁ w and N(u) = N(v) ⊎ N(w); u is removable.
pub fn find_type2(g: &Graph) -> Vec<TransformFinding> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in g.vertices() {
            for w in v + 1..g.order() {
                if is_type2(g, u, v, w) {
                    out.push(TransformFinding {
                        witness: Witness::TypeII { u, v, w },
                        removable: u,
                    });
                }
            }
        }
    }
    out
}

/// All congruent induced quadrangles. Each quadrangle is anchored at its
/// lowest vertex u; both of its pairs of independent edges are tried, giving
/// the witnesses (u, v, x, y) with v the smaller neighbor of u on the cycle
/// and (u, y, x, v) with the roles of the pairs exchanged. u is removable.
pub fn find_type3(g: &Graph) -> Vec<TransformFinding> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let nbrs: Vec<VertexId> = g.neighbors(u).filter(|&a| a > u).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                // Opposite corners: common neighbors of a and b, above u, not adjacent to u.
                let opposite = g.row(a) & g.row(b) & !g.row(u) & !crate::graph::low_mask(u + 1);
                for x in crate::graph::bits(opposite) {
                    for (v, y) in [(a, b), (b, a)] {
                        if is_type3(g, u, v, x, y) {
                            out.push(TransformFinding {
                                witness: Witness::TypeIII { u, v, x, y },
                                removable: u,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every finding, type I first, then II, then III.
pub fn find_all(g: &Graph) -> Vec<TransformFinding> {
    let mut out = find_type1(g);
    out.extend(find_type2(g));
    out.extend(find_type3(g));
    out
}

/// First finding in priority order I > II > III, lowest witness first.
pub fn first_finding(g: &Graph) -> Option<TransformFinding> {
    find_type1(g)
        .into_iter()
        .next()
        .or_else(|| find_type2(g).into_iter().next())
        .or_else(|| find_type3(g).into_iter().next())
}

/// Deletes the removable vertex of `finding`, verifying that p and n are
/// unchanged and the nullity drops by exactly one.
pub fn apply(g: &Graph, finding: &TransformFinding) -> Result<Graph> {
    apply_with_inertia(g, inertia(g), finding).map(|(h, _)| h)
}

/// [`apply`] with the inertia of `g` already known; also returns the inertia
/// of the result.
pub fn apply_with_inertia(
    g: &Graph,
    before: Inertia,
    finding: &TransformFinding,
) -> Result<(Graph, Inertia)> {
    if !finding.holds_in(g) {
        return Err(Error::StaleFinding(finding.to_string()));
    }
    let h = g.remove_vertex(finding.removable)?;
    let after = inertia(&h);
    if after.p != before.p || after.n != before.n || after.eta + 1 != before.eta {
        return Err(Error::InertiaLaw {
            before,
            after,
            vertex: finding.removable,
        });
    }
    Ok((h, after))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TerminalKind {
    EtaZero,
    DStarMember,
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub finding: TransformFinding,
    /// graph6 of the graph the finding was applied to.
    pub before: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    pub terminal: Graph,
    pub terminal_inertia: Inertia,
    pub terminal_kind: TerminalKind,
}

/// Greedy reduction: apply [`first_finding`] while the nullity is positive.
/// Stops at nullity zero, at a graph `is_dstar` accepts, or when nothing
/// applies. `is_dstar` is only consulted for nullity 2, the only nullity a
/// D* graph can have.
pub fn reduction_chain_with(
    g: &Graph,
    is_dstar: impl Fn(&CanonicalForm) -> bool,
) -> Result<ReductionChain> {
    let mut current = g.clone();
    let mut current_inertia = inertia(g);
    let mut steps = Vec::new();
    let terminal_kind = loop {
        if current_inertia.eta == 0 {
            break TerminalKind::EtaZero;
        }
        if current_inertia.eta == 2 && is_dstar(&crate::canon::canonical_form(&current)) {
            break TerminalKind::DStarMember;
        }
        let Some(finding) = first_finding(&current) else {
            break TerminalKind::Stuck;
        };
        let (next, next_inertia) = apply_with_inertia(&current, current_inertia, &finding)?;
        steps.push(ReductionStep {
            finding,
            before: to_graph6(&current),
        });
        current = next;
        current_inertia = next_inertia;
    };
    Ok(ReductionChain {
        steps,
        terminal: current,
        terminal_inertia: current_inertia,
        terminal_kind,
    })
}

/// [`reduction_chain_with`] against the computed D* catalog.
pub fn reduction_chain(g: &Graph) -> Result<ReductionChain> {
    let catalog = crate::census::dstar::catalog();
    reduction_chain_with(g, |form| catalog.contains(form))
}
