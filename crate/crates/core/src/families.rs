//! The nested-clique graphs G_n, clique-substituted lexicographic products,
//! the B_k naming scheme and the canonical (closed-twin quotient) graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, Graph, VertexId, MAX_ORDER};

/// G_n: cliques V = {v_1..v_⌈n/2⌉} and W = {w_1..w_⌊n/2⌋} (in that vertex
/// order) with v_i ~ w_j exactly when j ≥ ⌊n/2⌋ − i + 2. The W-neighborhoods
/// of v_1, v_2, … are then ∅ ⊂ {w_⌊n/2⌋} ⊂ {w_⌊n/2⌋, w_⌊n/2⌋−1} ⊂ ….
pub fn build_gn(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("G_n needs n >= 2, got {n}")));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n });
    }
    let big = n.div_ceil(2);
    let small = n / 2;
    let v_mask = low_mask(big);
    let w_mask = low_mask(n) & !v_mask;
    let mut rows = vec![0u64; n];
    for i in 1..=big {
        let vi = i - 1;
        rows[vi] |= v_mask & !bit(vi);
        for j in 1..=small {
            if j + i >= small + 2 {
                let wj = big + j - 1;
                rows[vi] |= bit(wj);
                rows[wj] |= bit(vi);
            }
        }
    }
    for j in 0..small {
        let wj = big + j;
        rows[wj] |= w_mask & !bit(wj);
    }
    Graph::from_rows(rows)
}

/// Generalized lexicographic product base[K_{sizes[0]}, …]: vertex j of the
/// base becomes a clique of `sizes[j]` vertices (laid out consecutively), and
/// two cliques are fully joined when their base vertices are adjacent.
pub fn lex_product(base: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != base.order() {
        return Err(Error::LengthMismatch {
            expected: base.order(),
            found: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("clique sizes must be positive".into()));
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_ORDER {
        return Err(Error::OrderOverflow { order: total });
    }
    let mut blocks = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &s in sizes {
        blocks.push(low_mask(start + s) & !low_mask(start));
        start += s;
    }
    let mut rows = Vec::with_capacity(total);
    for (j, &block) in blocks.iter().enumerate() {
        let joined = bits(base.row(j)).fold(0, |m, i| m | blocks[i]);
        for v in bits(block) {
            rows.push((block & !bit(v)) | joined);
        }
    }
    Graph::from_rows(rows)
}

/// Parameters of B_k(n_1, …, n_k) = G_k[K_{n_1}, …, K_{n_k}].
///
/// For k = 2s the parts are written (n_1..n_s; n_{s+1}..n_{2s}); for
/// k = 2s + 1 a trailing part n_{2s+1} follows a second semicolon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BkSpec {
    parts: Vec<usize>,
}

impl BkSpec {
    pub const MIN_K: usize = 3;

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < Self::MIN_K {
            return Err(Error::InvalidParameter(format!(
                "B_k needs k >= {}, got {}",
                Self::MIN_K,
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("B_k parts must be positive".into()));
        }
        let n: usize = parts.iter().sum();
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow { order: n });
        }
        Ok(BkSpec { parts })
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Half-length s = ⌊k/2⌋.
    pub fn s(&self) -> usize {
        self.k() / 2
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first_block(&self) -> &[usize] {
        &self.parts[..self.s()]
    }

    pub fn second_block(&self) -> &[usize] {
        &self.parts[self.s()..2 * self.s()]
    }

    /// The trailing part of an odd-k spec.
    pub fn tail(&self) -> Option<usize> {
        (self.k() % 2 == 1).then(|| self.parts[self.k() - 1])
    }

    /// The same graph with the two blocks exchanged.
    pub fn swapped(&self) -> BkSpec {
        let mut parts = Vec::with_capacity(self.k());
        parts.extend_from_slice(self.second_block());
        parts.extend_from_slice(self.first_block());
        parts.extend(self.tail());
        BkSpec { parts }
    }

    /// Naming representative: of the spec and its swap, the one whose first
    /// block is lexicographically no smaller than the second.
    pub fn canonical(&self) -> BkSpec {
        if self.first_block() >= self.second_block() {
            self.clone()
        } else {
            self.swapped()
        }
    }

    /// Clique sizes in G_k vertex order (v_1..v_⌈k/2⌉, w_1..w_⌊k/2⌋). For odd
    /// k the trailing part sits on v_{s+1}, the vertex adjacent to everything.
    pub fn sizes_in_gk_order(&self) -> Vec<usize> {
        let mut sizes = Vec::with_capacity(self.k());
        sizes.extend_from_slice(self.first_block());
        sizes.extend(self.tail());
        sizes.extend_from_slice(self.second_block());
        sizes
    }
}

impl fmt::Display for BkSpec {
    /// Writes the spec exactly as stored; use [`format_bk`] for the canonical name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "B{}({};{}",
            self.k(),
            join(self.first_block()),
            join(self.second_block())
        )?;
        if let Some(t) = self.tail() {
            write!(f, ";{t}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for BkSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bk(s)
    }
}

/// Parses `B<k>(a_1,…,a_s;b_1,…,b_s)` or `B<k>(…;…;c)`. Whitespace, a `_`
/// after the `B` and TeX braces around k (`B_{10}`) are tolerated.
pub fn parse_bk(text: &str) -> Result<BkSpec> {
    let fail = |reason: &str| Error::BkSyntax {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact.strip_prefix('B').ok_or_else(|| fail("must start with 'B'"))?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let open = rest.find('(').ok_or_else(|| fail("missing '('"))?;
    let k_text = rest[..open].trim_start_matches('{').trim_end_matches('}');
    let k: usize = k_text.parse().map_err(|_| fail("k is not an integer"))?;
    let body = rest[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| fail("missing closing ')'"))?;
    let blocks: Vec<Vec<usize>> = body
        .split(';')
        .map(|b| {
            b.split(',')
                .map(|x| x.parse::<usize>().map_err(|_| fail("part is not a positive integer")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let s = k / 2;
    let expected_blocks = if k.is_multiple_of(2) { 2 } else { 3 };
    if k < BkSpec::MIN_K {
        return Err(fail("k must be at least 3"));
    }
    if blocks.len() != expected_blocks {
        return Err(fail(&format!("expected {expected_blocks} ';'-separated blocks for k = {k}")));
    }
    if blocks[0].len() != s || blocks[1].len() != s {
        return Err(fail(&format!("each block must have {s} parts for k = {k}")));
    }
    if k % 2 == 1 && blocks[2].len() != 1 {
        return Err(fail("the trailing block of an odd-k name holds one part"));
    }
    let parts: Vec<usize> = blocks.into_iter().flatten().collect();
    if parts.contains(&0) {
        return Err(fail("parts must be positive"));
    }
    BkSpec::new(parts)
}

/// Canonical display name, e.g. `B6(4,3,2;4,3,1)`.
pub fn format_bk(spec: &BkSpec) -> String {
    spec.canonical().to_string()
}

/// B_k(parts) as a graph: G_k with clique k-th part substituted per
/// [`BkSpec::sizes_in_gk_order`].
pub fn build_bk(spec: &BkSpec) -> Result<Graph> {
    lex_product(&build_gn(spec.k())?, &spec.sizes_in_gk_order())
}

/// Quotient by the relation u ρ v ⇔ u ~ v and N(u)∖v = N(v)∖u (equal closed
/// neighborhoods), with class sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    /// One vertex per class, classes ordered by their smallest member.
    pub quotient: Graph,
    pub multiplicities: Vec<usize>,
    /// Original vertices of each class, ascending.
    pub classes: Vec<Vec<VertexId>>,
}

impl CanonicalDecomposition {
    /// quotient[K_{m_1}, …], isomorphic to the graph that was decomposed.
    pub fn reconstruct(&self) -> Result<Graph> {
        lex_product(&self.quotient, &self.multiplicities)
    }
}

pub fn canonical_graph(g: &Graph) -> CanonicalDecomposition {
    let mut unassigned = g.vertex_mask();
    let mut classes = Vec::new();
    let mut reps = 0u64;
    while unassigned != 0 {
        let v = unassigned.trailing_zeros() as usize;
        let closed = g.row(v) | bit(v);
        let class = bits(unassigned)
            .filter(|&u| g.row(u) | bit(u) == closed)
            .fold(0u64, |m, u| m | bit(u));
        unassigned &= !class;
        reps |= bit(v);
        classes.push(bits(class).collect::<Vec<_>>());
    }
    CanonicalDecomposition {
        quotient: g.induced_by_mask(reps),
        multiplicities: classes.iter().map(Vec::len).collect(),
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::{complete, cycle, path};
    use crate::spectral::{eigenvalues, inertia, Inertia};

    #[test]
    fn small_gn() {
        assert_eq!(build_gn(2).unwrap(), Graph::empty(2).unwrap());
        assert!(are_isomorphic(&build_gn(3).unwrap(), &path(3).unwrap()));
        assert!(are_isomorphic(&build_gn(4).unwrap(), &path(4).unwrap()));
        // v1 v2 v3 = 0 1 2, w1 w2 = 3 4.
        let g5 = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4), (1, 4), (2, 3), (2, 4)])
            .unwrap();
        assert_eq!(build_gn(5).unwrap(), g5);
        assert!(build_gn(1).is_err());
    }

    #[test]
    fn nested_w_neighborhoods() {
        for n in 2..=20 {
            let g = build_gn(n).unwrap();
            let big = n.div_ceil(2);
            let w_mask = g.vertex_mask() & !low_mask(big);
            let mut prev = 0u64;
            for v in 0..big {
                let nw = g.row(v) & w_mask;
                assert_eq!(nw & prev, prev);
                assert_eq!((nw & !prev).count_ones(), u32::from(v > 0), "n={n} v={v}");
                prev = nw;
            }
            assert_eq!(prev.count_ones() as usize, if n % 2 == 1 { n / 2 } else { n / 2 - 1 });
        }
    }

    #[test]
    fn lex_product_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(lex_product(&p4, &[1, 1, 1, 1]).unwrap(), p4);
        assert_eq!(lex_product(&complete(2).unwrap(), &[3, 2]).unwrap(), complete(5).unwrap());
        assert!(lex_product(&p4, &[1, 1]).is_err());
        assert!(lex_product(&p4, &[1, 0, 1, 1]).is_err());
        // P_3 with its centre last.
        let p3 = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let g = lex_product(&p3, &[1, 1, 3]).unwrap();
        let s = eigenvalues(&g, 1e-12).unwrap();
        assert!((s.lambda(3).unwrap() + 1.0).abs() < 1e-10);
    }

    #[test]
    fn bk_graphs() {
        let g5 = build_bk(&"B5(1,1;1,1;1)".parse().unwrap()).unwrap();
        assert_eq!(g5, build_gn(5).unwrap());
        let paw = build_bk(&"B3(2;1;1)".parse().unwrap()).unwrap();
        let expect = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(are_isomorphic(&paw, &expect));
        assert_eq!(inertia(&paw), Inertia::new(2, 2, 0));
        let big = build_bk(&"B6(4,3,3;2,1,1)".parse().unwrap()).unwrap();
        assert_eq!(big.order(), 14);
        assert_eq!(inertia(&big), Inertia::new(2, 10, 2));
    }

    #[test]
    fn naming() {
        let a: BkSpec = "B6(4,3,1;4,3,2)".parse().unwrap();
        assert_eq!(format_bk(&a), "B6(4,3,2;4,3,1)");
        let b: BkSpec = "B7(5,2,4;5,3,2;8)".parse().unwrap();
        assert_eq!(format_bk(&b), "B7(5,3,2;5,2,4;8)");
        let c = parse_bk("B_{11}(1,1,1,2,3; 1,1,1,1,1;1)").unwrap();
        assert_eq!(format_bk(&c), "B11(1,1,1,2,3;1,1,1,1,1;1)");
        assert_eq!(parse_bk(&format_bk(&a)).unwrap(), a.canonical());
        assert_eq!(b.tail(), Some(8));
        assert_eq!(b.sizes_in_gk_order(), vec![5, 2, 4, 8, 5, 3, 2]);
    }

    #[test]
    fn malformed_names() {
        for bad in [
            "C6(1,1,1;1,1,1)",
            "B6(1,1,1;1,1)",
            "B6(1,1,1;1,1,1;1)",
            "B7(1,1,1;1,1,1)",
            "B7(1,1,1;1,1,1;1,2)",
            "B6(1,1,x;1,1,1)",
            "B6(1,1,0;1,1,1)",
            "B6(1,1,1;1,1,1",
            "B2(1;1)",
            "Bx(1;1;1)",
        ] {
            assert!(parse_bk(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_graph_examples() {
        let d = canonical_graph(&complete(5).unwrap());
        assert_eq!(d.quotient.order(), 1);
        assert_eq!(d.multiplicities, vec![5]);
        let d = canonical_graph(&cycle(4).unwrap());
        assert_eq!(d.quotient, cycle(4).unwrap());
        assert_eq!(d.multiplicities, vec![1; 4]);
        let spec: BkSpec = "B7(2,3,1;2,3,1;2)".parse().unwrap();
        let g = build_bk(&spec).unwrap();
        let d = canonical_graph(&g);
        assert!(are_isomorphic(&d.quotient, &build_gn(7).unwrap()));
        let mut m = d.multiplicities.clone();
        let mut p = spec.parts().to_vec();
        m.sort_unstable();
        p.sort_unstable();
        assert_eq!(m, p);
        assert_eq!(d.reconstruct().unwrap(), g);
    }
}
