//! The six-vertex forbidden subgraphs Γ_1–Γ_13, each with three positive
//! eigenvalues.
//!
//! Γ_1–Γ_9 are the hexagon v*–x–y–y*–y'–x' with a nonempty subset of the
//! chords {xx', xy', xy*, x'y*}; their isomorphism classes are named by
//! matching λ_3 inside each chord count. Γ_10–Γ_13 are the configurations
//! that arise when v* has minimum degree, X = N(v*) and Y (the non-neighbors
//! of v*) is a clique.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{cycle, Graph};
use crate::spectral::{eigenvalues, inertia, Inertia};

#[derive(Clone, Debug, PartialEq)]
pub struct ForbiddenGraph {
    pub name: String,
    pub graph: Graph,
    pub lambda3: f64,
    /// Number of hexagon chords, for Γ_1–Γ_9.
    pub chords: Option<usize>,
    pub inertia: Inertia,
}

/// Hexagon vertex labels.
pub const V_STAR: usize = 0;
pub const X: usize = 1;
pub const Y: usize = 2;
pub const Y_STAR: usize = 3;
pub const Y_PRIME: usize = 4;
pub const X_PRIME: usize = 5;

/// The admissible chords: xx', xy', xy*, x'y*.
pub const CHORDS: [(usize, usize); 4] = [(X, X_PRIME), (X, Y_PRIME), (X, Y_STAR), (X_PRIME, Y_STAR)];

/// λ_3 values that name the chord classes, grouped by chord count.
pub const CHORD_LAMBDA3: [(&str, usize, f64); 9] = [
    ("Gamma1", 1, 0.6180),
    ("Gamma2", 1, 0.4142),
    ("Gamma3", 2, 0.5293),
    ("Gamma4", 2, 0.1830),
    ("Gamma5", 2, 0.6180),
    ("Gamma6", 3, 0.1124),
    ("Gamma7", 3, 0.6180),
    ("Gamma8", 3, 0.2798),
    ("Gamma9", 4, 0.1589),
];

/// Expected λ_3 of Γ_10–Γ_13. Γ_12 is fixed by its neighborhood constraints
/// and has λ_3 = 0.1096.
pub const CLIQUE_CASE_LAMBDA3: [(&str, f64); 4] = [
    ("Gamma10", 0.1505),
    ("Gamma11", 0.2679),
    ("Gamma12", 0.1096),
    ("Gamma13", 0.1873),
];

pub fn lambda3(g: &Graph) -> f64 {
    eigenvalues(g, 1e-12)
        .expect("positive tolerance")
        .lambda(3)
        .expect("at least three vertices")
}

/// Hexagon plus the chords selected by the low four bits of `subset`.
pub fn hexagon_with_chords(subset: u8) -> Graph {
    let c6 = cycle(6).expect("six vertices");
    let mut edges = c6.edges();
    for (b, &chord) in CHORDS.iter().enumerate() {
        if subset & (1 << b) != 0 {
            edges.push(chord);
        }
    }
    Graph::from_edges(6, &edges).expect("valid edges")
}

/// Isomorphism classes of hexagon-plus-chords graphs, keyed by chord count.
pub fn chord_classes() -> BTreeMap<usize, Vec<(CanonicalForm, Graph)>> {
    let mut out: BTreeMap<usize, Vec<(CanonicalForm, Graph)>> = BTreeMap::new();
    for subset in 0u8..16 {
        let g = hexagon_with_chords(subset);
        let form = canonical_form(&g);
        let class = out.entry(subset.count_ones() as usize).or_default();
        if !class.iter().any(|(f, _)| *f == form) {
            class.push((form, g));
        }
    }
    out
}

/// Vertex order for Γ_10–Γ_13: v*, three vertices of X (or two of X and a
/// third of Y), then the rest of Y. Edge lists per graph below.
fn clique_case_graphs() -> [(&'static str, Graph); 4] {
    let build = |edges: &[(usize, usize)]| Graph::from_edges(6, edges).expect("valid edges");
    // Γ_10: X ⊇ {x, x'} with x ≁ x', N_Y(x) = {y, y'} ⊊ N_Y(x') = {y, y', y*}.
    // Labels v*=0 x=1 x'=2 y=3 y'=4 y*=5.
    let g10 = build(&[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
    // Γ_11: x1 ≁ x2 sharing N_Y = {y, y'}, x* ~ x2, x* ≁ x1, N_Y(x*) = {y, y'}.
    // Labels v*=0 x*=1 x1=2 x2=3 y=4 y'=5.
    let g11 = build(&[
        (0, 1), (0, 2), (0, 3), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (1, 4), (1, 5), (4, 5),
    ]);
    // Γ_12 / Γ_13: x ≁ x', N_Y(x) = {y}, N_Y(x') = {y, y'}, x* ~ x, x', x* ≁ y,
    // and x* ≁ y' (Γ_12) or x* ~ y' (Γ_13). Labels v*=0 x=1 x*=2 x'=3 y=4 y'=5.
    let base = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (3, 4), (3, 5), (4, 5)];
    let g12 = build(&base);
    let mut with = base.to_vec();
    with.push((2, 5));
    let g13 = build(&with);
    [("Gamma10", g10), ("Gamma11", g11), ("Gamma12", g12), ("Gamma13", g13)]
}

/// Γ_1–Γ_13 with their λ_3 values.
pub fn forbidden_catalog() -> Vec<ForbiddenGraph> {
    let mut out = Vec::new();
    for (chords, class) in chord_classes() {
        if chords == 0 {
            continue;
        }
        let mut named: Vec<ForbiddenGraph> = class
            .into_iter()
            .map(|(_, g)| {
                let l3 = lambda3(&g);
                let name = CHORD_LAMBDA3
                    .iter()
                    .filter(|(_, c, _)| *c == chords)
                    .min_by(|a, b| (a.2 - l3).abs().total_cmp(&(b.2 - l3).abs()))
                    .map(|(n, _, _)| n.to_string())
                    .unwrap_or_else(|| format!("chords{chords}"));
                ForbiddenGraph {
                    name,
                    inertia: inertia(&g),
                    graph: g,
                    lambda3: l3,
                    chords: Some(chords),
                }
            })
            .collect();
        named.sort_by(|a, b| a.name.cmp(&b.name));
        out.extend(named);
    }
    for (name, g) in clique_case_graphs() {
        out.push(ForbiddenGraph {
            name: name.to_string(),
            lambda3: lambda3(&g),
            inertia: inertia(&g),
            graph: g,
            chords: None,
        });
    }
    out.sort_by_key(|f| f.name.trim_start_matches("Gamma").parse::<usize>().unwrap_or(usize::MAX));
    out
}
