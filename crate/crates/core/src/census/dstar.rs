//! D*: the graphs B_k(n_1, …, n_k) with 4 ≤ k ≤ 14, n ≤ 14 and
//! λ_3 = λ_4 = 0, up to isomorphism.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use super::{classify_bk_with_inertia, compositions, ClassLabel, CLASSIFY_K};
use crate::canon::{canonical_form, CanonicalForm};
use crate::families::{build_bk, format_bk, BkSpec};
use crate::spectral::Inertia;

/// Largest order searched for D* members.
pub const DSTAR_MAX_N: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DStarEntry {
    /// Canonical B_k name of the representative.
    pub name: String,
    pub spec: BkSpec,
    #[serde(skip)]
    pub form: CanonicalForm,
    pub inertia: Inertia,
    /// Other canonical names whose graphs fall in the same isomorphism class.
    pub aliases: Vec<String>,
}

impl DStarEntry {
    pub fn k(&self) -> usize {
        self.spec.k()
    }

    pub fn order(&self) -> usize {
        self.spec.order()
    }
}

#[derive(Clone, Debug, Default)]
pub struct DStarCatalog {
    /// Sorted by (k, n, name).
    pub entries: Vec<DStarEntry>,
    forms: HashSet<CanonicalForm>,
}

impl DStarCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.forms.contains(form)
    }

    /// Entry count per k, for every k in 4..=14 (zeros included).
    pub fn counts_by_k(&self) -> BTreeMap<usize, usize> {
        let mut counts: BTreeMap<usize, usize> = CLASSIFY_K.map(|k| (k, 0)).collect();
        for e in &self.entries {
            *counts.entry(e.k()).or_default() += 1;
        }
        counts
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }
}

/// All (spec, inertia) pairs with the given label for orders in `orders`.
pub(crate) fn specs_with_label(
    orders: impl Iterator<Item = usize>,
    label: ClassLabel,
) -> Vec<(BkSpec, Inertia)> {
    let work: Vec<(usize, usize)> = orders
        .flat_map(|n| CLASSIFY_K.filter(move |&k| k <= n).map(move |k| (n, k)))
        .collect();
    work.into_par_iter()
        .flat_map_iter(|(n, k)| {
            compositions(n, k)
                .expect("k <= n")
                .filter_map(|parts| {
                    let spec = BkSpec::new(parts).expect("valid parts");
                    let (l, i) = classify_bk_with_inertia(&spec).expect("k in range");
                    (l == label).then_some((spec, i))
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Enumerates every B_k(n) with 4 ≤ k ≤ 14 and k ≤ n ≤ 14, keeps the
/// DoubleZero ones and groups them into isomorphism classes.
pub fn compute_dstar() -> DStarCatalog {
    let hits = specs_with_label(4..=DSTAR_MAX_N, ClassLabel::DoubleZero);
    let mut classes: BTreeMap<CanonicalForm, Vec<(BkSpec, Inertia)>> = BTreeMap::new();
    for (spec, i) in hits {
        let form = canonical_form(&build_bk(&spec).expect("valid spec"));
        classes.entry(form).or_default().push((spec, i));
    }
    let mut entries: Vec<DStarEntry> = classes
        .into_iter()
        .map(|(form, members)| {
            let mut names: Vec<(BkSpec, String)> = members
                .iter()
                .map(|(s, _)| (s.canonical(), format_bk(s)))
                .collect();
            names.sort();
            names.dedup();
            let (spec, name) = names[0].clone();
            DStarEntry {
                name,
                spec,
                form,
                inertia: members[0].1,
                aliases: names[1..].iter().map(|(_, n)| n.clone()).collect(),
            }
        })
        .collect();
    entries.sort_by(|a, b| (a.k(), a.order(), &a.name).cmp(&(b.k(), b.order(), &b.name)));
    let forms = entries.iter().map(|e| e.form.clone()).collect();
    DStarCatalog { entries, forms }
}

/// Memoized [`compute_dstar`].
pub fn catalog() -> &'static DStarCatalog {
    static CATALOG: OnceLock<DStarCatalog> = OnceLock::new();
    CATALOG.get_or_init(compute_dstar)
}
