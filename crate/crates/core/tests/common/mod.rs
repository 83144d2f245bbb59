#![allow(dead_code)]

use inertia_graphs::graph::Graph;
use proptest::prelude::*;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graphs with `lo..=hi` vertices.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A graph together with a permutation of its vertices.
pub fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(lo, hi).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// Every labeled graph on `n` vertices, in upper-triangle bit order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |mask| {
        let bits: Vec<bool> = (0..m).map(|b| mask & (1 << b) != 0).collect();
        graph_from_bits(n, &bits)
    })
}

/// All permutations of 0..n (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Least adjacency string over all vertex orders.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let mut s = Vec::new();
            for j in 1..g.order() {
                for i in 0..j {
                    s.push(g.has_edge(p[i], p[j]));
                }
            }
            s
        })
        .min()
        .unwrap_or_default()
}
