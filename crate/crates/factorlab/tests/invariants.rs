//! Cross-cutting invariants: the cubic equivalences on the full n <= 12
//! listing, enumeration bijections, parity facts and format round-trips.

mod common;

use factorlab::catalog;
use factorlab::certify;
use factorlab::construct::{star_product, StarSpec};
use factorlab::decide;
use factorlab::factor::{extensions_of, perfect_matchings, two_factors, Matching};
use factorlab::graph::Graph;
use factorlab::graph6::parse_graph6;
use factorlab::named::{make_named, NamedGraph};
use proptest::prelude::*;

fn named(which: NamedGraph) -> Graph {
    make_named(&which).unwrap()
}

fn all_cubic_upto_12() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [4, 6, 8, 10, 12] {
        for (i, g) in catalog::cubic_connected(n).into_iter().enumerate() {
            out.push((format!("cubic-n{}-{}", n, i), g));
        }
    }
    for n in [2, 4, 6] {
        for (i, g) in catalog::cubic_multigraphs(n).into_iter().enumerate() {
            out.push((format!("multi-n{}-{}", n, i), g));
        }
    }
    out
}

/// The 2FH/malleability equivalence and the unique-extension lemma,
/// exhaustively over every connected cubic graph on up to 12 vertices.
#[test]
fn cubic_equivalences_exhaustive_to_n12() {
    for (name, g) in all_cubic_upto_12() {
        assert!(
            perfect_matchings(&g).next().is_some(),
            "{}: no matching",
            name
        );
        let is_2fh = decide::is_2fh(&g).verdict;
        let mv = decide::malleable_vertices(&g).unwrap();
        assert_eq!(is_2fh, !mv.is_empty(), "{}", name);
        assert_eq!(is_2fh, mv.len() == g.n(), "{}", name);
        if decide::is_pmh(&g).unwrap().verdict {
            let unique = decide::find_unique_extension_pm(&g).unwrap().is_some();
            assert_eq!(!is_2fh, unique, "{}", name);
        }
    }
}

/// PMH implies even-2-factorable for cubic graphs.
#[test]
fn pmh_implies_e2f_for_cubic() {
    for (name, g) in all_cubic_upto_12() {
        if decide::is_pmh(&g).unwrap().verdict {
            assert!(
                decide::is_e2f(&g).verdict,
                "{}: PMH cubic graph must be E2F",
                name
            );
        }
    }
}

/// In a cubic graph the 2-factors are exactly the complements of the
/// perfect matchings.
#[test]
fn cubic_two_factors_are_matching_complements() {
    let mut graphs = vec![
        named(NamedGraph::Complete(4)),
        named(NamedGraph::CompleteBipartite(3, 3)),
        named(NamedGraph::Cube),
        named(NamedGraph::Theta2),
        named(NamedGraph::Bip4),
        named(NamedGraph::Heawood),
    ];
    graphs.extend(catalog::cubic_connected(8));
    graphs.extend(catalog::cubic_multigraphs(6));
    for g in &graphs {
        let mut complements: Vec<Vec<usize>> = perfect_matchings(g)
            .map(|m| (0..g.m()).filter(|e| !m.contains(*e)).collect())
            .collect();
        complements.sort();
        let mut factors: Vec<Vec<usize>> = two_factors(g).map(|t| t.edges().to_vec()).collect();
        factors.sort();
        assert_eq!(complements, factors);
    }
}

/// The per-edge malleability criterion equals the t-1-cycles form: witness
/// extensions per uncovered edge assemble into at most t-1 Hamiltonian
/// cycles that jointly cover the vertex's edges.
#[test]
fn malleability_definitional_equivalence() {
    let graphs = vec![
        named(NamedGraph::Cycle(4)),
        named(NamedGraph::Cycle(6)),
        named(NamedGraph::Complete(4)),
        named(NamedGraph::CompleteBipartite(3, 3)),
        named(NamedGraph::Y(2)),
        named(NamedGraph::B(3)),
        named(NamedGraph::Theta2),
        named(NamedGraph::CompleteBipartite(4, 4)),
    ];
    for g in &graphs {
        let malleable = decide::malleable_vertices(g).unwrap();
        for &v in &malleable {
            let t = g.deg(v);
            for m in perfect_matchings(g) {
                let extensions = extensions_of(g, &m).unwrap();
                let mut cycles: Vec<Vec<usize>> = Vec::new();
                for &e in g.incident_edges(v) {
                    if m.contains(e) {
                        continue;
                    }
                    let witness = extensions
                        .iter()
                        .find(|x| x.partner.contains(e))
                        .unwrap_or_else(|| panic!("malleable vertex lost edge {}", e));
                    let mut cycle: Vec<usize> = m.edges().to_vec();
                    cycle.extend_from_slice(witness.partner.edges());
                    cycle.sort_unstable();
                    if !cycles.contains(&cycle) {
                        cycles.push(cycle);
                    }
                }
                assert!(cycles.len() < t, "more than t-1 distinct cycles needed");
                let covered: Vec<usize> = g
                    .incident_edges(v)
                    .iter()
                    .copied()
                    .filter(|&e| m.contains(e) || cycles.iter().any(|c| c.contains(&e)))
                    .collect();
                assert_eq!(
                    covered.len(),
                    t,
                    "cycles must cover every edge at the vertex"
                );
            }
        }
        // and every non-malleable vertex of degree >= 2 without parallels
        // carries a failure witness that re-validates
        for v in 0..g.n() {
            if g.deg(v) < 2 || malleable.contains(&v) || (g.n() > 2 && g.has_parallel_at(v)) {
                continue;
            }
            let rep = decide::is_malleable(g, v).unwrap();
            assert!(!rep.verdict);
            certify::revalidate(g, &rep).unwrap();
        }
    }
}

/// A cubic graph is 2FH exactly when every matching complement walks a
/// single cycle (the complement bijection in decision form).
#[test]
fn cubic_2fh_iff_all_complements_hamiltonian() {
    let mut graphs = vec![
        named(NamedGraph::Complete(4)),
        named(NamedGraph::CompleteBipartite(3, 3)),
        named(NamedGraph::Cube),
        named(NamedGraph::Bip4),
        named(NamedGraph::Heawood),
    ];
    graphs.extend(catalog::cubic_connected(10));
    for g in &graphs {
        let all_complements_ham = perfect_matchings(g).all(|m| {
            let complement: Vec<usize> = (0..g.m()).filter(|e| !m.contains(*e)).collect();
            factorlab::factor::is_hamiltonian_cycle(g, &complement)
        });
        assert_eq!(decide::is_2fh(g).verdict, all_complements_ham);
    }
}

/// A Y-extension of a simple graph creates exactly one triangle, on the
/// three new vertices.
#[test]
fn y_extension_adds_exactly_one_triangle() {
    for g in [
        named(NamedGraph::CompleteBipartite(3, 3)),
        named(NamedGraph::Cube),
    ] {
        let y = factorlab::construct::y_extension(&g, 0).unwrap();
        let h = &y.graph;
        assert_eq!(h.n(), g.n() + 2);
        assert_eq!(h.girth(), Some(3));
        let mut triangles = Vec::new();
        for a in 0..h.n() {
            for b in a + 1..h.n() {
                for c in b + 1..h.n() {
                    let adj = |u: usize, v: usize| {
                        h.incident_edges(u).iter().any(|&e| h.other_end(e, u) == v)
                    };
                    if adj(a, b) && adj(b, c) && adj(a, c) {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        let mut expect = y.triangle;
        expect.sort_unstable();
        assert_eq!(triangles, vec![expect]);
    }
}

/// The principal cut of a star product is cycle-separating, so the product
/// of two K3,3 copies is not cyclically 4-edge-connected even though both
/// factors are.
#[test]
fn star_product_breaks_cyclic_connectivity() {
    let k33 = named(NamedGraph::CompleteBipartite(3, 3));
    assert!(k33.is_cyclically_k_edge_connected(4, 1_000_000).unwrap());
    let star = star_product(&StarSpec::new(&k33, 0, &k33, 0, [0, 1, 2])).unwrap();
    assert!(star.graph.is_cycle_separating(star.principal_cut.edges()));
    assert!(!star
        .graph
        .is_cyclically_k_edge_connected(4, 1_000_000)
        .unwrap());
    assert!(star
        .graph
        .is_cyclically_k_edge_connected(3, 1_000_000)
        .unwrap());
}

/// Parity: a principal star-product cut has odd sides, so every perfect
/// matching meets it an odd number of times; with a bipartite factor it is
/// met exactly once.
#[test]
fn tightness_parity_on_star_products() {
    let k33 = named(NamedGraph::CompleteBipartite(3, 3));
    let k4 = named(NamedGraph::Complete(4));
    let q3 = named(NamedGraph::Cube);
    let b3 = named(NamedGraph::B(3));
    let pairs: Vec<(&Graph, usize, &Graph, usize, bool)> = vec![
        (&k33, 0, &k33, 0, true),
        (&q3, 0, &k33, 0, true),
        (&b3, 0, &k33, 0, true),
        (&k4, 0, &k4, 0, false), // both sides odd, no bipartite factor
    ];
    for (g1, v1, g2, v2, has_bipartite) in pairs {
        let star = star_product(&StarSpec::new(g1, v1, g2, v2, [0, 1, 2])).unwrap();
        for m in perfect_matchings(&star.graph) {
            let hits = star
                .principal_cut
                .edges()
                .iter()
                .filter(|&&e| m.contains(e))
                .count();
            assert_eq!(hits % 2, 1, "odd sides force odd intersections");
            if has_bipartite {
                assert_eq!(hits, 1, "a bipartite factor forces tightness");
            }
        }
    }
}

/// The exhaustive PMH mode tabulates a correct extension count for every
/// matching.
#[test]
fn exhaustive_extension_table_matches_oracle() {
    let q3 = named(NamedGraph::Cube);
    let rep = decide::is_pmh_with(&q3, true, &factorlab::factor::EngineConfig::default()).unwrap();
    assert!(rep.verdict);
    let Some(factorlab::decide::Certificate::ExtensionTable { rows }) = rep.certificate else {
        panic!("expected an extension table");
    };
    assert_eq!(rows.len(), 9);
    for row in &rows {
        let naive = common::naive_extensions(&q3, &row.matching);
        assert_eq!(naive.len(), row.extensions);
    }
    assert!(
        rows.iter().any(|r| r.extensions == 1),
        "the unique-extension matching shows up"
    );
    certify::revalidate_certificate(
        &q3,
        &factorlab::decide::Certificate::ExtensionTable { rows },
    )
    .unwrap();
}

/// Certificates produced across the named catalog re-validate.
#[test]
fn every_report_certificate_revalidates() {
    let graphs = vec![
        named(NamedGraph::Complete(4)),
        named(NamedGraph::CompleteBipartite(3, 3)),
        named(NamedGraph::Cube),
        named(NamedGraph::Y(2)),
        named(NamedGraph::B(3)),
        named(NamedGraph::Bip4),
        named(NamedGraph::K33PlusEdge),
        named(NamedGraph::Theta2),
    ];
    for g in &graphs {
        let rep = decide::is_2fh(g);
        certify::revalidate(g, &rep).unwrap();
        let rep = decide::is_e2f(g);
        certify::revalidate(g, &rep).unwrap();
        if let Ok(rep) = decide::is_pmh(g) {
            certify::revalidate(g, &rep).unwrap();
        }
        for v in 0..g.n() {
            if g.deg(v) >= 2 {
                let rep = decide::is_malleable(g, v).unwrap();
                certify::revalidate(g, &rep).unwrap();
            }
        }
        for e in 0..g.m() {
            let rep = decide::extends_through_edge(g, e).unwrap();
            certify::revalidate(g, &rep).unwrap();
        }
    }
}

/// Work bounds surface as errors, not wrong answers.
#[test]
fn infeasible_size_fires_under_tiny_bounds() {
    let heawood = named(NamedGraph::Heawood);
    assert!(heawood.is_cyclically_k_edge_connected(4, 5).is_err());
    let cfg = factorlab::factor::EngineConfig { node_cap: 3 };
    assert!(matches!(
        decide::is_pmh_with(&heawood, false, &cfg),
        Err(factorlab::factor::EngineError::WorkBoundExceeded(_))
    ));
}

// ---------------------------------------------------------------------------
// property tests
// ---------------------------------------------------------------------------

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=10).prop_flat_map(|n| {
        (Just(n), prop::collection::vec((0..n, 1..n), 0..=18)).prop_map(|(n, raw)| {
            let pairs: Vec<(usize, usize)> =
                raw.into_iter().map(|(u, d)| (u, (u + d) % n)).collect();
            Graph::new(n, pairs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        let text = g.write_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph_strategy()) {
        let sum: usize = (0..g.n()).map(|v| g.incident_edges(v).len()).sum();
        prop_assert_eq!(sum, 2 * g.m());
    }

    #[test]
    fn girth_two_iff_parallel_edges(g in graph_strategy()) {
        let has_parallel = (0..g.n()).any(|v| g.has_parallel_at(v));
        prop_assert_eq!(g.girth() == Some(2), has_parallel);
        if let Some(girth) = g.girth() {
            if girth == 3 {
                prop_assert!(!has_parallel);
            }
        }
    }

    #[test]
    fn bipartite_graphs_have_even_girth(g in graph_strategy()) {
        if g.is_bipartite().is_some() {
            if let Some(girth) = g.girth() {
                prop_assert_eq!(girth % 2, 0);
            }
        }
    }

    #[test]
    fn cyclic_connectivity_is_monotone(g in graph_strategy()) {
        let values: Vec<bool> = (1..=5)
            .map(|k| g.is_cyclically_k_edge_connected(k, 1_000_000).unwrap())
            .collect();
        for w in values.windows(2) {
            prop_assert!(w[0] || !w[1], "k+1 connectivity implies k connectivity");
        }
    }

    #[test]
    fn matchings_are_valid_and_unique(g in graph_strategy()) {
        let all: Vec<_> = perfect_matchings(&g).collect();
        for m in &all {
            prop_assert!(Matching::new(&g, m.edges().to_vec()).is_ok());
        }
        let mut sorted: Vec<_> = all.iter().map(|m| m.edges().to_vec()).collect();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len(), "no matching is emitted twice");
    }

    #[test]
    fn graph6_round_trip_via_independent_encoder(g in graph_strategy()) {
        // restrict to the simple support of the generated graph
        let mut seen = std::collections::BTreeSet::new();
        for e in g.edges() {
            seen.insert((e.u.min(e.v), e.u.max(e.v)));
        }
        let simple = Graph::new(g.n(), seen.iter().copied().collect()).unwrap();
        let encoded = encode_graph6(&simple);
        let back = parse_graph6(&encoded).unwrap();
        let mut expect: Vec<(usize, usize)> = seen.into_iter().collect();
        expect.sort_unstable();
        let mut got: Vec<(usize, usize)> =
            back.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        got.sort_unstable();
        prop_assert_eq!(back.n(), simple.n());
        prop_assert_eq!(expect, got);
    }
}

/// Test-local graph6 encoder, independent of the library's reader.
fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for row in adj.iter().take(j) {
            bits.push(row[j]);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        s.push((63 + v) as char);
    }
    s
}
