//! Verification runs. Each returns a [`Report`]; a check passes iff it
//! records no violations.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::dstar::{catalog, DStarCatalog};
use super::forbidden::forbidden_catalog;
use super::oracle::{cached_census, par_labeled, CensusRecord, ORACLE_MAX_N};
use super::{
    classify_bk_with_inertia, compositions, disconnected_gs, labeled_count, multipartite_parts,
    ClassLabel, Report, CLASSIFY_K,
};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::{build_bk, parse_bk, BkSpec};
use crate::graph::{bits, Graph};
use crate::graph6::to_graph6;
use crate::spectral::{inertia, is_one_positive};
use crate::transforms::{apply_with_inertia, find_all};

/// Canonical names of the published D* listing, one per line.
pub const TABLE1_GOLDEN: &str = include_str!("../../data/table1_names.txt");

/// Oracle class counts per order and nullity.
pub const TABLE2_GOLDEN: &str = include_str!("../../data/table2_counts.json");

/// Per-k D* sizes of the published listing.
pub const TABLE1_COUNTS: [(usize, usize); 11] = [
    (4, 0),
    (5, 0),
    (6, 7),
    (7, 15),
    (8, 39),
    (9, 36),
    (10, 43),
    (11, 20),
    (12, 12),
    (13, 2),
    (14, 1),
];

pub const TABLE1_TOTAL: usize = 175;

/// Compares a D* catalog with a list of canonical names.
pub fn verify_table1_against(cat: &DStarCatalog, golden: &str) -> Report {
    let start = Instant::now();
    let mut report = Report::new("table1", json!({ "golden_entries": golden.lines().filter(|l| !l.trim().is_empty()).count() }));
    report.examined = cat.len() as u64;

    let mut golden_forms: BTreeMap<CanonicalForm, String> = BTreeMap::new();
    for line in golden.lines().map(str::trim).filter(|l| !l.is_empty()) {
        match parse_bk(line).and_then(|s| build_bk(&s)) {
            Ok(g) => {
                if let Some(prev) = golden_forms.insert(canonical_form(&g), line.to_string()) {
                    report.violation(format!("golden duplicate: {prev} ~ {line}"));
                }
            }
            Err(e) => report.violation(format!("golden unparsable: {line}: {e}")),
        }
    }

    let computed: HashSet<&CanonicalForm> = cat.entries.iter().map(|e| &e.form).collect();
    let missing: Vec<String> = golden_forms
        .iter()
        .filter(|(f, _)| !computed.contains(f))
        .map(|(_, n)| n.clone())
        .collect();
    let extra: Vec<String> = cat
        .entries
        .iter()
        .filter(|e| !golden_forms.contains_key(&e.form))
        .map(|e| e.name.clone())
        .collect();
    for n in &missing {
        report.violation(format!("in golden, not computed: {n}"));
    }
    for n in &extra {
        report.violation(format!("computed, not in golden: {n}"));
    }

    let counts = cat.counts_by_k();
    for (k, want) in TABLE1_COUNTS {
        let got = counts.get(&k).copied().unwrap_or(0);
        if got != want {
            report.violation(format!("k = {k}: {got} entries, expected {want}"));
        }
    }
    if cat.len() != TABLE1_TOTAL {
        report.violation(format!("{} entries, expected {TABLE1_TOTAL}", cat.len()));
    }
    for e in &cat.entries {
        if e.inertia.p != 2 || e.inertia.eta != 2 {
            report.violation(format!("{} has inertia {}", e.name, e.inertia));
        }
    }
    // Names in the golden that are spelled differently from our representative.
    let names: HashSet<&str> = cat
        .entries
        .iter()
        .flat_map(|e| std::iter::once(e.name.as_str()).chain(e.aliases.iter().map(String::as_str)))
        .collect();
    let respelled = golden_forms.values().filter(|n| !names.contains(n.as_str())).count();

    report.details = json!({
        "entries": cat.len(),
        "counts_by_k": counts,
        "missing_from_computed": missing,
        "missing_from_golden": extra,
        "golden_names_not_canonical": respelled,
    });
    report.timed(start)
}

/// D* against the transcribed golden file.
pub fn verify_table1() -> Report {
    let start = Instant::now();
    verify_table1_against(catalog(), TABLE1_GOLDEN).timed(start)
}

/// Per-k, per-label tallies of B_k(n) for each n in `orders`, with the
/// specs labelled DoubleZero or SingleZero.
pub(crate) fn tally(orders: &[usize]) -> Vec<(usize, usize, BTreeMap<ClassLabel, u64>, Vec<String>)> {
    let work: Vec<(usize, usize)> = orders
        .iter()
        .flat_map(|&n| CLASSIFY_K.filter(move |&k| k <= n).map(move |k| (n, k)))
        .collect();
    work.into_par_iter()
        .map(|(n, k)| {
            let mut counts: BTreeMap<ClassLabel, u64> = ClassLabel::ALL.iter().map(|&l| (l, 0)).collect();
            let mut hits = Vec::new();
            for parts in compositions(n, k).expect("k <= n") {
                let spec = BkSpec::new(parts).expect("valid parts");
                let (label, _) = classify_bk_with_inertia(&spec).expect("k in range");
                *counts.get_mut(&label).expect("all labels present") += 1;
                if matches!(label, ClassLabel::DoubleZero | ClassLabel::SingleZero) {
                    hits.push(format!("{spec} {}", label.name()));
                }
            }
            (n, k, counts, hits)
        })
        .collect()
}

fn tally_report(
    check: &str,
    orders: &[usize],
    bad: impl Fn(&str) -> bool,
) -> Report {
    let start = Instant::now();
    let mut report = Report::new(check, json!({ "n": orders, "k": [CLASSIFY_K.start(), CLASSIFY_K.end()] }));
    let mut per: BTreeMap<String, BTreeMap<&'static str, u64>> = BTreeMap::new();
    for (n, k, counts, hits) in tally(orders) {
        report.examined += counts.values().sum::<u64>();
        for h in hits.into_iter().filter(|h| bad(h)) {
            report.violation(h);
        }
        per.insert(
            format!("n={n},k={k}"),
            counts.into_iter().map(|(l, c)| (l.name(), c)).collect(),
        );
    }
    report.details = json!({ "counts": per });
    report.timed(start)
}

/// No composition of 15 into 4..=14 parts gives p = 2 with η ≥ 1.
pub fn verify_lemma_4_9() -> Report {
    tally_report("lemma49", &[15], |_| true)
}

/// No DoubleZero B_k(n) for the given orders.
pub fn verify_lemma_4_12(orders: &[usize]) -> Result<Report> {
    if orders.iter().any(|n| !(15..=crate::graph::MAX_ORDER).contains(n)) {
        return Err(Error::InvalidParameter(format!(
            "order sweep covers 15 <= n <= 64, got {orders:?}"
        )));
    }
    Ok(tally_report("lemma412", orders, |h| h.ends_with(ClassLabel::DoubleZero.name())))
}

/// Number of p = 2 classes of one order and nullity, split by shape.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaCounts {
    pub total: usize,
    pub connected: usize,
    /// Disconnected with an isolated vertex (H + K_1).
    pub with_isolated: usize,
    /// Disconnected without isolated vertices.
    pub other_disconnected: usize,
}

/// Order → nullity → counts.
pub type Table2Counts = BTreeMap<usize, BTreeMap<usize, EtaCounts>>;

pub fn eta_counts(records: &[CensusRecord]) -> BTreeMap<usize, EtaCounts> {
    let mut out: BTreeMap<usize, EtaCounts> = BTreeMap::new();
    for r in records {
        let c = out.entry(r.inertia.eta).or_default();
        c.total += 1;
        if r.connected {
            c.connected += 1;
        } else if r.graph().isolated_mask() != 0 {
            c.with_isolated += 1;
        } else {
            c.other_disconnected += 1;
        }
    }
    out
}

pub fn table2_golden() -> Table2Counts {
    serde_json::from_str(TABLE2_GOLDEN).expect("golden table2 counts parse")
}

/// Counts read off the published census listing: (n, s) → (connected, H + K_1, other).
pub const TABLE2_LISTING: [(usize, usize, usize, usize, usize); 5] = [
    (4, 0, 2, 0, 1),
    (5, 0, 6, 0, 1),
    (5, 1, 8, 0, 2),
    (6, 1, 27, 7, 2),
    (6, 2, 24, 10, 2),
];

/// Census counts via the oracle for orders 4..=`oracle_n`: golden counts plus the
/// totals implied by the printed listing.
pub fn verify_table2(oracle_n: usize) -> Result<Report> {
    if !(4..=ORACLE_MAX_N).contains(&oracle_n) {
        return Err(Error::InvalidParameter(format!(
            "table2 needs 4 <= oracle-n <= {ORACLE_MAX_N}, got {oracle_n}"
        )));
    }
    let start = Instant::now();
    let golden = table2_golden();
    let mut report = Report::new("table2", json!({ "oracle_n": oracle_n }));
    let mut computed: Table2Counts = BTreeMap::new();
    for n in 4..=oracle_n {
        let records = cached_census(n)?;
        report.examined += records.len() as u64;
        let counts = eta_counts(records);
        if let Some(want) = golden.get(&n) {
            if *want != counts {
                report.violation(format!("n = {n}: counts differ from golden"));
            }
        }
        computed.insert(n, counts);
    }
    let get = |n: usize, s: usize| {
        computed
            .get(&n)
            .and_then(|m| m.get(&s))
            .copied()
            .unwrap_or_default()
    };
    for (n, s, c, iso, other) in TABLE2_LISTING {
        if n > oracle_n {
            continue;
        }
        let got = get(n, s);
        let total = c + iso + other;
        if got.total != total {
            report.violation(format!("n = {n}, s = {s}: {} classes, listing has {total}", got.total));
        }
    }
    if oracle_n >= 6 {
        for s in 3..=6 {
            if get(6, s).total != 0 {
                report.violation(format!("n = 6, s = {s}: expected no graphs"));
            }
        }
    }
    if oracle_n >= 4 && computed[&4].keys().any(|&s| s != 0) {
        report.violation("n = 4: nonzero nullity present");
    }
    if oracle_n >= 6 && get(6, 0).total != 17 {
        report.violation(format!("n = 6, s = 0: {} classes, expected 17", get(6, 0).total));
    }
    report.details = serde_json::to_value(&computed).expect("counts serialize");
    Ok(report.timed(start))
}

fn oracle_guard(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::InvalidParameter(format!("{what} needs 1 <= n <= {max}, got {n}")));
    }
    Ok(())
}

/// Smith's theorem over every labeled graph on `n` vertices.
pub fn verify_smith(n: usize) -> Result<Report> {
    oracle_guard(n, 7, "smith")?;
    let start = Instant::now();
    let mut report = Report::new("smith", json!({ "n": n }));
    report.examined = labeled_count(n);
    let bad = par_labeled(n, |g| {
        (is_one_positive(&g) != (inertia(&g).p == 1)).then(|| to_graph6(&g))
    });
    for b in bad {
        report.violation(b);
    }
    report.details = json!({ "labeled_graphs": labeled_count(n) });
    Ok(report.timed(start))
}

/// Every labeled graph on `n` vertices with η = n - 3 has p = 1 and is a
/// complete tripartite graph plus isolated vertices.
pub fn verify_eta_max(n: usize) -> Result<Report> {
    oracle_guard(n, 7, "etamax")?;
    let start = Instant::now();
    let mut report = Report::new("etamax", json!({ "n": n }));
    report.examined = labeled_count(n);
    let results = par_labeled(n, |g| {
        let i = inertia(&g);
        if n < 3 || i.eta != n - 3 {
            return None;
        }
        let ok = i.p == 1 && multipartite_parts(&g).is_some_and(|p| p.len() == 3);
        Some((canonical_form(&g), ok))
    });
    let mut shapes: BTreeMap<CanonicalForm, bool> = BTreeMap::new();
    for (f, ok) in results {
        shapes.insert(f, ok);
    }
    let mut tripartite: Vec<String> = Vec::new();
    for (f, ok) in &shapes {
        let g = f.to_graph();
        if *ok {
            tripartite.push(to_graph6(&g));
        } else {
            report.violation(to_graph6(&g));
        }
    }
    report.details = json!({ "classes": shapes.len(), "graphs": tripartite });
    Ok(report.timed(start))
}

/// Every finding on every census graph of order ≤ `n_max`
/// keeps (p, n) and lowers η by one.
pub fn verify_transformation_law(n_max: usize) -> Result<Report> {
    oracle_guard(n_max, 7, "transformation law")?;
    let start = Instant::now();
    let mut report = Report::new("transformation_law", json!({ "n_max": n_max }));
    let mut by_kind: BTreeMap<String, u64> = BTreeMap::new();
    for n in 1..=n_max {
        let records = cached_census(n)?;
        let outcomes: Vec<Vec<(String, Option<String>)>> = records
            .par_iter()
            .map(|r| {
                let g = r.graph();
                find_all(&g)
                    .into_iter()
                    .map(|f| {
                        let kind = format!("{:?}", f.kind());
                        let err = apply_with_inertia(&g, r.inertia, &f)
                            .err()
                            .map(|e| format!("{} {f}: {e}", r.graph6));
                        (kind, err)
                    })
                    .collect()
            })
            .collect();
        for (kind, err) in outcomes.into_iter().flatten() {
            report.examined += 1;
            *by_kind.entry(kind).or_default() += 1;
            if let Some(e) = err {
                report.violation(e);
            }
        }
    }
    report.details = json!({ "findings_by_kind": by_kind });
    Ok(report.timed(start))
}

/// Existence of a transformation in connected census graphs: always for
/// η ≥ 3, and for η = 2 unless the graph lies in D*.
pub fn verify_structure_existence(orders: &[usize]) -> Result<Report> {
    for &n in orders {
        oracle_guard(n, 7, "structure existence")?;
    }
    let start = Instant::now();
    let dstar = catalog();
    let mut report = Report::new("structure_existence", json!({ "n": orders }));
    let mut in_dstar = 0u64;
    let mut with_finding = 0u64;
    for &n in orders {
        if n < 6 {
            continue;
        }
        for r in cached_census(n)?.iter().filter(|r| r.connected && r.inertia.eta >= 2) {
            report.examined += 1;
            let has = !find_all(&r.graph()).is_empty();
            if has {
                with_finding += 1;
            } else if r.inertia.eta == 2 && dstar.contains(&r.form) {
                in_dstar += 1;
            } else {
                report.violation(format!("{} eta={}", r.graph6, r.inertia.eta));
            }
        }
    }
    report.details = json!({ "with_finding": with_finding, "dstar_members": in_dstar });
    Ok(report.timed(start))
}

/// Disconnected census classes with η = s ≥ 2 are
/// exactly the output of [`disconnected_gs`].
pub fn verify_disconnected(n_max: usize) -> Result<Report> {
    oracle_guard(n_max, 7, "disconnected")?;
    let start = Instant::now();
    let mut report = Report::new("disconnected", json!({ "n_max": n_max }));
    for n in 6..=n_max {
        let records = cached_census(n)?;
        for s in 2..=n - 3 {
            let census: BTreeSet<&CanonicalForm> = records
                .iter()
                .filter(|r| !r.connected && r.inertia.eta == s)
                .map(|r| &r.form)
                .collect();
            let generated: Vec<Graph> = disconnected_gs(n, s)?;
            let gen_forms: BTreeSet<CanonicalForm> = generated.iter().map(canonical_form).collect();
            report.examined += census.len() as u64;
            for f in &census {
                if !gen_forms.contains(*f) {
                    report.violation(format!("census only: {}", to_graph6(&f.to_graph())));
                }
            }
            for f in &gen_forms {
                if !census.contains(f) {
                    report.violation(format!("generator only: {}", to_graph6(&f.to_graph())));
                }
            }
        }
    }
    Ok(report.timed(start))
}

/// In a connected census graph, the non-neighbors of a
/// minimum-degree vertex induce a complete multipartite graph plus
/// isolated vertices.
pub fn verify_min_degree_shape(n_max: usize) -> Result<Report> {
    oracle_guard(n_max, 7, "min-degree shape")?;
    let start = Instant::now();
    let mut report = Report::new("min_degree_shape", json!({ "n_max": n_max }));
    for n in 1..=n_max {
        for r in cached_census(n)?.iter().filter(|r| r.connected) {
            report.examined += 1;
            let g = r.graph();
            let delta = g.min_degree().expect("nonempty");
            let v = g.vertices().find(|&v| g.degree(v) == delta).expect("exists");
            let y = g.vertex_mask() & !g.row(v) & !crate::graph::bit(v);
            if multipartite_parts(&g.induced_by_mask(y)).is_none() {
                report.violation(r.graph6.clone());
            }
        }
    }
    Ok(report.timed(start))
}

/// Connected census graphs with η = 0 are B_s graphs with
/// 3 ≤ s ≤ 12.
pub fn verify_nonsingular_shape(n_max: usize) -> Result<Report> {
    oracle_guard(n_max, 7, "nonsingular shape")?;
    let start = Instant::now();
    let mut report = Report::new("nonsingular_shape", json!({ "n_max": n_max }));
    for n in 1..=n_max {
        let mut forms: HashSet<CanonicalForm> = HashSet::new();
        for s in 3..=n.min(12) {
            for parts in compositions(n, s)? {
                forms.insert(canonical_form(&build_bk(&BkSpec::new(parts)?)?));
            }
        }
        for r in cached_census(n)?.iter().filter(|r| r.connected && r.inertia.eta == 0) {
            report.examined += 1;
            if !forms.contains(&r.form) {
                report.violation(r.graph6.clone());
            }
        }
    }
    Ok(report.timed(start))
}

/// No census graph contains a Γ catalog graph as an induced subgraph.
pub fn verify_no_forbidden(n_max: usize) -> Result<Report> {
    oracle_guard(n_max, 7, "forbidden subgraphs")?;
    let start = Instant::now();
    let mut report = Report::new("forbidden_subgraphs", json!({ "n_max": n_max }));
    let gammas: HashSet<CanonicalForm> =
        forbidden_catalog().iter().map(|f| canonical_form(&f.graph)).collect();
    for n in 6..=n_max {
        for r in cached_census(n)? {
            let g = r.graph();
            for mask in 0u64..(1 << n) {
                if mask.count_ones() != 6 {
                    continue;
                }
                report.examined += 1;
                if gammas.contains(&canonical_form(&g.induced_by_mask(mask))) {
                    let verts: Vec<usize> = bits(mask).collect();
                    report.violation(format!("{} on {verts:?}", r.graph6));
                }
            }
        }
    }
    Ok(report.timed(start))
}
