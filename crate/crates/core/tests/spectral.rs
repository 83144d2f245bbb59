mod common;

use common::{all_labeled, graphs};
use inertia_graphs::graph::Graph;
use inertia_graphs::spectral::{eigenvalues, inertia, matrix_inertia, pendant_reduce};
use proptest::prelude::*;

/// Identity with row operations r_i += f r_j applied in sequence.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut c: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, f) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        for k in 0..n {
            c[i][k] += f * c[j][k];
        }
    }
    c
}

fn congruence(a: &[Vec<i64>], c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i64;
            for k in 0..n {
                for l in 0..n {
                    s += c[k][i] * a[k][l] * c[l][j];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

fn graph_and_mask(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, u64)> {
    graphs(lo, hi).prop_flat_map(|g| {
        let full = g.vertex_mask();
        (Just(g), any::<u64>().prop_map(move |m| m & full))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sylvester_congruence(
        g in graphs(1, 10),
        ops in proptest::collection::vec((0usize..10, 0usize..10, -1i64..=1), 0..12),
    ) {
        let c = unimodular(g.order(), &ops);
        let b = congruence(&g.adjacency_matrix(), &c);
        prop_assert_eq!(matrix_inertia(&b), inertia(&g));
    }

    #[test]
    fn induced_subgraphs_have_no_more_positive((g, mask) in graph_and_mask(1, 12)) {
        let h = g.induced_by_mask(mask);
        prop_assert!(inertia(&h).p <= inertia(&g).p);
    }

    #[test]
    fn interlacing((g, mask) in graph_and_mask(1, 8)) {
        let h = g.induced_by_mask(mask);
        let (n, m) = (g.order(), h.order());
        let lg = eigenvalues(&g, 1e-12).unwrap();
        let lh = eigenvalues(&h, 1e-12).unwrap();
        for i in 1..=m {
            let (gi, hi, gl) = (lg.lambda(i).unwrap(), lh.lambda(i).unwrap(), lg.lambda(n - m + i).unwrap());
            prop_assert!(gi >= hi - 1e-8, "lambda_{} of g {} < {}", i, gi, hi);
            prop_assert!(hi >= gl - 1e-8, "lambda_{} of h {} < {}", i, hi, gl);
        }
    }

    #[test]
    fn pendant_reduction(g in graphs(2, 12)) {
        if let Some((h, v, u)) = pendant_reduce(&g) {
            prop_assert_eq!(g.degree(v), 1);
            prop_assert!(g.has_edge(u, v));
            let (a, b) = (inertia(&g), inertia(&h));
            prop_assert_eq!(b.p + 1, a.p);
            prop_assert_eq!(b.n + 1, a.n);
            prop_assert_eq!(b.eta, a.eta);
        }
    }

    #[test]
    fn trace_vanishes(g in graphs(0, 16)) {
        let s = eigenvalues(&g, 1e-12).unwrap();
        prop_assert_eq!(s.values.len(), g.order());
        prop_assert!(s.values.windows(2).all(|w| w[0] >= w[1]));
        let sum: f64 = s.values.iter().sum();
        prop_assert!(sum.abs() <= 1e-9 * g.order().max(1) as f64, "trace {}", sum);
    }
}

#[test]
fn float_and_exact_agree_on_small_graphs() {
    for n in 0..=7 {
        for g in all_labeled(n) {
            let exact = inertia(&g);
            let float = eigenvalues(&g, 1e-12).unwrap().sign_counts(1e-8);
            assert_eq!(float, exact, "n = {n}, edges {:?}", g.edges());
        }
    }
}
