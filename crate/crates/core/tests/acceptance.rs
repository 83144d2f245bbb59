//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use inertia_graphs::canon::are_isomorphic;
use inertia_graphs::census::compositions::binomial;
use inertia_graphs::census::dstar::compute_dstar;
use inertia_graphs::census::forbidden::{chord_classes, lambda3, CHORD_LAMBDA3};
use inertia_graphs::census::oracle::cached_census;
use inertia_graphs::census::verify::{
    eta_counts, table2_golden, verify_lemma_4_12, verify_lemma_4_9, verify_smith,
    verify_structure_existence, verify_table1, verify_transformation_law, EtaCounts,
};
use inertia_graphs::census::forbidden_catalog;
use inertia_graphs::families::{build_bk, build_gn, canonical_graph, lex_product, BkSpec};
use inertia_graphs::graph::{bit, Graph};
use inertia_graphs::spectral::{eigenvalues, inertia, matrix_inertia, pendant_reduce, Inertia};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_2024;
const LAMBDA3_TOL: f64 = 5e-5;
const BLOWUP_TOL: f64 = 1e-10;
const INTERLACING_TOL: f64 = 1e-8;
const JACOBI_TOL: f64 = 1e-12;

const SYLVESTER_CASES: usize = 1000;
const INTERLACING_CASES: usize = 500;
const PENDANT_CASES: usize = 500;
const RECONSTRUCTION_CASES: usize = 1000;
const BLOCK_SWAP_CASES: usize = 200;
const NESTED_GN_MAX: usize = 16;

struct Outcome {
    pass: bool,
    summary: String,
}

fn outcome(pass: bool, summary: impl Into<String>) -> Outcome {
    Outcome { pass, summary: summary.into() }
}

fn criterion(id: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = o.pass && in_time;
    let timing = if in_time {
        format!("{:.2}s", elapsed.as_secs_f64())
    } else {
        format!("{:.2}s, over the {}s budget", elapsed.as_secs_f64(), budget.as_secs())
    };
    println!(
        "{} [{id:>2}] {title}: {} ({timing})",
        if pass { "PASS" } else { "FAIL" },
        o.summary
    );
    pass
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let density = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn shuffled(rng: &mut StdRng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    g.permuted(&perm).unwrap()
}

fn c1_dstar() -> Outcome {
    let report = verify_table1();
    let cat = compute_dstar();
    let counts = cat.counts_by_k();
    let eta_two = cat.entries.iter().all(|e| e.inertia == Inertia::new(2, e.order() - 4, 2));
    let pairwise = (0..cat.len()).all(|i| {
        (i + 1..cat.len()).all(|j| cat.entries[i].form != cat.entries[j].form)
    });
    let summary = format!(
        "{} classes, per-k {:?}, eta = 2 for all: {eta_two}, golden mismatches: {}",
        cat.len(),
        counts.values().collect::<Vec<_>>(),
        report.violations
    );
    outcome(report.passed() && eta_two && pairwise, summary)
}

fn c2_order15() -> Outcome {
    let report = verify_lemma_4_9();
    let expected: u64 = (4..=14).map(|k| binomial(14, k - 1)).sum();
    outcome(
        report.passed() && report.examined == expected,
        format!(
            "{} compositions of 15 (binomial sum {expected}), {} with p = 2 and eta >= 1",
            report.examined, report.violations
        ),
    )
}

fn c3_orders16_17() -> Outcome {
    let report = verify_lemma_4_12(&[16, 17]).unwrap();
    let expected: u64 = [16u64, 17]
        .iter()
        .flat_map(|&n| (4..=14).map(move |k| binomial(n - 1, k - 1)))
        .sum();
    outcome(
        report.passed() && report.examined == expected,
        format!("{} specs at n = 16, 17, {} DoubleZero", report.examined, report.violations),
    )
}

fn c4_census_counts() -> Outcome {
    let mut problems: Vec<String> = Vec::new();
    let mut counts: BTreeMap<usize, BTreeMap<usize, EtaCounts>> = BTreeMap::new();
    for n in 4..=6 {
        counts.insert(n, eta_counts(cached_census(n).unwrap()));
    }
    let total = |n: usize, s: usize| counts[&n].get(&s).map_or(0, |c| c.total);
    let mut expect = |label: String, got: usize, want: usize| {
        if got != want {
            problems.push(format!("{label}: {got}, expected {want}"));
        }
    };
    expect("n=4 classes".into(), counts[&4].values().map(|c| c.total).sum(), 3);
    expect("n=4 eta>0".into(), (1..4).map(|s| total(4, s)).sum(), 0);
    expect("n=5 eta=0".into(), total(5, 0), 7);
    expect("n=5 eta=1".into(), total(5, 1), 10);
    expect("n=5 eta>=2".into(), (2..5).map(|s| total(5, s)).sum(), 0);
    expect("n=6 eta=0".into(), total(6, 0), 17);
    expect("n=6 eta=3".into(), total(6, 3), 0);
    let golden = table2_golden();
    for s in [1, 2] {
        expect(
            format!("n=6 eta={s} vs golden"),
            total(6, s),
            golden[&6].get(&s).map_or(0, |c| c.total),
        );
    }
    // Listed shapes: (connected, H + K_1, other disconnected).
    for (s, listed) in [(1, (27, 7, 2)), (2, (24, 10, 2))] {
        let c = counts[&6].get(&s).copied().unwrap_or_default();
        let got = (c.connected, c.with_isolated, c.other_disconnected);
        if got != listed {
            problems.push(format!("n=6 eta={s} listing {listed:?}, oracle {got:?}"));
        }
    }
    let summary = format!(
        "oracle eta=1/eta=2 at n=6: {}/{}; {}",
        total(6, 1),
        total(6, 2),
        if problems.is_empty() { "all counts match".to_string() } else { problems.join("; ") }
    );
    outcome(problems.is_empty(), summary)
}

fn c5_hexagon() -> Outcome {
    let mut bad = Vec::new();
    for (chords, class) in chord_classes() {
        if chords == 0 {
            continue;
        }
        let mut got: Vec<f64> = class.iter().map(|(_, g)| lambda3(g)).collect();
        let mut want: Vec<f64> = CHORD_LAMBDA3
            .iter()
            .filter(|(_, c, _)| *c == chords)
            .map(|(_, _, l)| *l)
            .collect();
        got.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        let ok = got.len() == want.len()
            && got.iter().zip(&want).all(|(a, b)| (a - b).abs() <= LAMBDA3_TOL);
        if !ok {
            bad.push(format!("{chords} chords: {got:?} vs {want:?}"));
        }
    }
    let cat = forbidden_catalog();
    let not_three: Vec<&str> =
        cat.iter().filter(|f| inertia(&f.graph).p != 3).map(|f| f.name.as_str()).collect();
    outcome(
        bad.is_empty() && not_three.is_empty() && cat.len() == 13,
        format!(
            "chord classes 1+2+3+3+1 within {LAMBDA3_TOL}: {}; {} catalog graphs, p != 3: {not_three:?}",
            bad.is_empty(),
            cat.len()
        ),
    )
}

fn c6_blowups() -> Outcome {
    let l3 = |g: &Graph| eigenvalues(g, JACOBI_TOL).unwrap().lambda(3).unwrap();
    let g3 = build_gn(3).unwrap();
    let mut worst: f64 = (l3(&inertia_graphs::graph::path(3).unwrap()) + 2f64.sqrt()).abs();
    for m in 2..=6 {
        worst = worst.max((l3(&lex_product(&g3, &[1, 1, m]).unwrap()) + 1.0).abs());
    }
    let mut rng = StdRng::seed_from_u64(SEED ^ 6);
    let mut triples = Vec::new();
    while triples.len() < 5 {
        let (a, b, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6), rng.gen_range(1..=6));
        if a * b > 1 {
            triples.push((a, b, c));
        }
    }
    for &(a, b, c) in &triples {
        worst = worst.max((l3(&lex_product(&g3, &[a, b, c]).unwrap()) + 1.0).abs());
    }
    outcome(
        worst <= BLOWUP_TOL,
        format!("max deviation {worst:.2e} over P3, m = 2..6 and triples {triples:?}"),
    )
}

fn c7_transformation_law() -> Outcome {
    let report = verify_transformation_law(7).unwrap();
    outcome(
        report.passed(),
        format!(
            "{} findings on the n <= 7 census, {} violations, by kind {}",
            report.examined, report.violations, report.details["findings_by_kind"]
        ),
    )
}

fn c8_existence() -> Outcome {
    let report = verify_structure_existence(&[6, 7]).unwrap();
    outcome(
        report.passed(),
        format!(
            "{} connected graphs with eta >= 2 at n = 6, 7; {}; {} violations",
            report.examined, report.details, report.violations
        ),
    )
}

fn c9_one_positive() -> Outcome {
    let mut examined = 0;
    let mut violations = 0;
    for n in 1..=6 {
        let r = verify_smith(n).unwrap();
        examined += r.examined;
        violations += r.violations;
    }
    outcome(
        violations == 0,
        format!("{examined} labeled graphs for n <= 6, {violations} violations"),
    )
}

/// Random unimodular matrix: identity with random integer row additions.
fn unimodular(rng: &mut StdRng, n: usize) -> Vec<Vec<i64>> {
    let mut c: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let f: i64 = rng.gen_range(-2..=2);
        for k in 0..n {
            c[i][k] += f * c[j][k];
        }
    }
    c.shuffle(rng);
    c
}

fn congruence(a: &[Vec<i64>], c: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = a.len();
    let mut ac = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i64;
            for k in 0..n {
                s = s.checked_add(a[i][k].checked_mul(c[k][j])?)?;
            }
            ac[i][j] = s;
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i64;
            for k in 0..n {
                s = s.checked_add(c[k][i].checked_mul(ac[k][j])?)?;
            }
            out[i][j] = s;
        }
    }
    Some(out)
}

fn c10_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut failures: BTreeMap<&str, usize> = BTreeMap::new();
    let mut fail = |name: &'static str, ok: bool| {
        let e = failures.entry(name).or_default();
        if !ok {
            *e += 1;
        }
    };

    let mut done = 0;
    while done < SYLVESTER_CASES {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let c = unimodular(&mut rng, n);
        let Some(m) = congruence(&g.adjacency_matrix(), &c) else { continue };
        fail("sylvester", matrix_inertia(&m) == inertia(&g));
        done += 1;
    }

    for _ in 0..INTERLACING_CASES {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n);
        let h = g.remove_vertex(rng.gen_range(0..n)).unwrap();
        let a = eigenvalues(&g, JACOBI_TOL).unwrap().values;
        let b = eigenvalues(&h, JACOBI_TOL).unwrap().values;
        let ok = (0..n - 1)
            .all(|i| a[i] + INTERLACING_TOL >= b[i] && b[i] + INTERLACING_TOL >= a[i + 1]);
        fail("interlacing", ok);
    }

    for _ in 0..PENDANT_CASES {
        let n = rng.gen_range(1..=9);
        let base = random_graph(&mut rng, n);
        let support = rng.gen_range(0..n);
        let g = shuffled(&mut rng, &base.with_vertex(bit(support)).unwrap());
        let (h, _, _) = pendant_reduce(&g).expect("has a pendant");
        let (a, b) = (inertia(&g), inertia(&h));
        fail("pendant", a == Inertia::new(b.p + 1, b.n + 1, b.eta));
    }

    for _ in 0..RECONSTRUCTION_CASES {
        let n = rng.gen_range(1..=8);
        let base = random_graph(&mut rng, n);
        let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let g = shuffled(&mut rng, &lex_product(&base, &sizes).unwrap());
        let d = canonical_graph(&g);
        fail("reconstruction", are_isomorphic(&d.reconstruct().unwrap(), &g));
    }

    for n in 2..=NESTED_GN_MAX {
        let (small, big) = (build_gn(n).unwrap(), build_gn(n + 1).unwrap());
        let ok = big.vertices().any(|v| are_isomorphic(&big.remove_vertex(v).unwrap(), &small));
        fail("nested_gn", ok);
    }

    for _ in 0..BLOCK_SWAP_CASES {
        let k = rng.gen_range(4..=14);
        let parts: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        let spec = BkSpec::new(parts).unwrap();
        let ok = are_isomorphic(&build_bk(&spec).unwrap(), &build_bk(&spec.swapped()).unwrap());
        fail("block_swap", ok);
    }

    let total: usize = failures.values().sum();
    outcome(total == 0, format!("failures per suite {failures:?}"))
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "D* catalog vs transcribed names", s(60), c1_dstar),
        criterion(2, "No p = 2, eta >= 1 among B_k(15)", s(10), c2_order15),
        criterion(3, "No DoubleZero among B_k(16), B_k(17)", s(60), c3_orders16_17),
        criterion(4, "Census counts for n = 4, 5, 6", s(30), c4_census_counts),
        criterion(5, "Hexagon chord classes and lambda_3", s(1), c5_hexagon),
        criterion(6, "lambda_3 of G_3 blow-ups", s(1), c6_blowups),
        criterion(7, "Congruent-vertex inertia law", s(600), c7_transformation_law),
        criterion(8, "Every connected eta >= 2 graph reduces", s(600), c8_existence),
        criterion(9, "One positive eigenvalue characterization", s(5), c9_one_positive),
        criterion(10, "Property suites", s(120), c10_properties),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
