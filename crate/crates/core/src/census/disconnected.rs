//! Disconnected graphs with two positive eigenvalues and nullity s:
//! H + K_1 with H ∈ G^{s-1}(n-1), or a sum of two complete multipartite
//! graphs.

use std::collections::BTreeMap;

use super::oracle::cached_census;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{complete_multipartite, disjoint_union, Graph, MAX_ORDER};

/// Largest H order for which H + K_1 summands are drawn from the oracle.
pub const ISOLATED_SOURCE_MAX_N: usize = 7;

/// Integer partitions of `n` into parts of size at most `max`, each sorted
/// descending.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// K_T + K_R with T, R partitions having at least two parts each, |T| + |R| = n
/// and nullity (|T| - #T) + (|R| - #R) = s.
pub fn multipartite_sums(n: usize, s: usize) -> Result<Vec<Graph>> {
    check_range(n, s)?;
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for a in 2..=n / 2 {
        let b = n - a;
        for t in partitions(a, a).into_iter().filter(|t| t.len() >= 2) {
            for r in partitions(b, b).into_iter().filter(|r| r.len() >= 2) {
                if n - t.len() - r.len() != s {
                    continue;
                }
                let g = disjoint_union(&complete_multipartite(&t)?, &complete_multipartite(&r)?)?;
                found.entry(canonical_form(&g)).or_insert(g);
            }
        }
    }
    Ok(found.into_values().collect())
}

fn check_range(n: usize, s: usize) -> Result<()> {
    if !(4..=MAX_ORDER).contains(&n) || s + 3 > n {
        return Err(Error::InvalidParameter(format!(
            "disconnected generator needs 4 <= n <= {MAX_ORDER} and s <= n - 3, got n = {n}, s = {s}"
        )));
    }
    Ok(())
}

/// Every disconnected graph on `n` vertices with p = 2 and nullity `s`, up
/// to isomorphism, sorted by canonical form. The H + K_1 family needs the
/// census of order n - 1 and is left out when n - 1 exceeds
/// [`ISOLATED_SOURCE_MAX_N`].
pub fn disconnected_gs(n: usize, s: usize) -> Result<Vec<Graph>> {
    check_range(n, s)?;
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in multipartite_sums(n, s)? {
        found.insert(canonical_form(&g), g);
    }
    if s >= 1 && n - 1 <= ISOLATED_SOURCE_MAX_N {
        for rec in cached_census(n - 1)? {
            if rec.inertia.eta == s - 1 {
                let g = disjoint_union(&rec.graph(), &Graph::empty(1)?)?;
                found.entry(canonical_form(&g)).or_insert(g);
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::{complete, path};
    use crate::spectral::inertia;

    fn contains(list: &[Graph], g: &Graph) -> bool {
        list.iter().any(|h| are_isomorphic(h, g))
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn six_two() {
        let list = disconnected_gs(6, 2).unwrap();
        let k2 = complete(2).unwrap();
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        let p3 = path(3).unwrap();
        assert!(contains(&list, &disjoint_union(&k2, &k22).unwrap()));
        assert!(contains(&list, &disjoint_union(&p3, &p3).unwrap()));
        for g in &list {
            let i = inertia(g);
            assert_eq!((i.p, i.eta), (2, 2));
            assert!(!g.is_connected());
        }
    }

    #[test]
    fn six_three_without_isolated_is_empty() {
        assert!(multipartite_sums(6, 3).unwrap().is_empty());
    }

    #[test]
    fn five_one() {
        let list = disconnected_gs(5, 1).unwrap();
        let k1 = Graph::empty(1).unwrap();
        let k2 = complete(2).unwrap();
        let two_k2 = disjoint_union(&k2, &k2).unwrap();
        assert!(contains(&list, &disjoint_union(&two_k2, &k1).unwrap()));
        assert!(contains(&list, &disjoint_union(&k2, &path(3).unwrap()).unwrap()));
        let p4 = path(4).unwrap();
        assert!(contains(&list, &disjoint_union(&p4, &k1).unwrap()));
        assert_eq!(list.len(), 4);
    }

    #[test]
    fn range_errors() {
        assert!(disconnected_gs(6, 4).is_err());
        assert!(disconnected_gs(3, 0).is_err());
        assert!(disconnected_gs(65, 2).is_err());
    }
}
