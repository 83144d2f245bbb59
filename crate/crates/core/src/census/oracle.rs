//! Brute-force census: every labeled graph on n vertices, exact inertia for
//! each, isomorphism classes of those with p = 2.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{labeled_count, labeled_graph};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectral::{inertia, Inertia};

/// Largest order the oracle accepts; 2^28 labeled graphs at n = 8.
pub const ORACLE_MAX_N: usize = 8;

/// One isomorphism class with p = 2. The stored graph is the canonically
/// labelled representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    #[serde(serialize_with = "form_hex")]
    pub form: CanonicalForm,
    pub graph6: String,
    pub inertia: Inertia,
    pub order: usize,
    pub connected: bool,
}

fn form_hex<S: Serializer>(form: &CanonicalForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&form.to_hex())
}

impl CensusRecord {
    pub fn from_form(form: CanonicalForm, inertia: Inertia) -> Self {
        let g = form.to_graph();
        CensusRecord {
            graph6: to_graph6(&g),
            order: g.order(),
            connected: g.is_connected(),
            inertia,
            form,
        }
    }

    pub fn graph(&self) -> Graph {
        self.form.to_graph()
    }
}

const CHUNK: u64 = 1 << 12;

/// Runs `f` on every labeled graph on `n` vertices in parallel and merges
/// the per-chunk results in chunk order.
pub(crate) fn par_labeled<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Graph) -> Option<T> + Sync,
{
    let total = labeled_count(n);
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            (lo..hi).filter_map(|m| f(labeled_graph(n, m))).collect::<Vec<_>>()
        })
        .collect()
}

/// All isomorphism classes of graphs on `n` vertices with exactly two
/// positive eigenvalues, sorted by canonical form.
pub fn oracle_census(n: usize) -> Result<Vec<CensusRecord>> {
    if n == 0 || n > ORACLE_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "oracle census supports 1 <= n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let hits = par_labeled(n, |g| {
        let i = inertia(&g);
        (i.p == 2).then(|| (canonical_form(&g), i))
    });
    let classes: BTreeMap<CanonicalForm, Inertia> = hits.into_iter().collect();
    Ok(classes
        .into_iter()
        .map(|(form, i)| CensusRecord::from_form(form, i))
        .collect())
}

static CACHE: [OnceLock<Vec<CensusRecord>>; ORACLE_MAX_N + 1] =
    [const { OnceLock::new() }; ORACLE_MAX_N + 1];

/// Memoized [`oracle_census`].
pub fn cached_census(n: usize) -> Result<&'static [CensusRecord]> {
    if n == 0 || n > ORACLE_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "oracle census supports 1 <= n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    if let Some(v) = CACHE[n].get() {
        return Ok(v);
    }
    let computed = oracle_census(n)?;
    Ok(CACHE[n].get_or_init(|| computed))
}
