//! Instance catalogs: the named graphs the theorem checks run on, plus
//! vendored exhaustive listings of small cubic graphs.
//!
//! The listings under `data/` were enumerated offline (one representative
//! per isomorphism class); the test suite cross-checks their cardinalities
//! against the known counts, so a damaged catalog cannot pass unnoticed.

use crate::graph::Graph;
use crate::graph6::parse_graph6_stream;
use crate::named::{make_named, NamedGraph};

/// A catalog instance. `claimed_cubic` is the catalog's promise, re-verified
/// by the checks that rely on it, so a corrupted entry surfaces as a check
/// failure rather than a silent scope change.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub claimed_cubic: bool,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, graph: Graph) -> CatalogEntry {
        let claimed_cubic = graph.is_cubic();
        CatalogEntry {
            name: name.into(),
            graph,
            claimed_cubic,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    /// Named instances; theorem checks look these up by name.
    pub named: Vec<CatalogEntry>,
    /// Every connected cubic simple graph on up to `cubic_max_n` vertices
    /// plus every connected cubic multigraph with a parallel pair on up to
    /// 6 vertices.
    pub cubic_small: Vec<CatalogEntry>,
    /// Every connected bipartite cubic simple graph on up to 14 vertices.
    pub bipartite_cubic: Vec<CatalogEntry>,
    /// Factor pool for the 2-cut connection checks.
    pub twocut_set: Vec<String>,
}

const CUBIC_G6: [(usize, &str); 5] = [
    (4, include_str!("../data/cubic_connected_n04.g6")),
    (6, include_str!("../data/cubic_connected_n06.g6")),
    (8, include_str!("../data/cubic_connected_n08.g6")),
    (10, include_str!("../data/cubic_connected_n10.g6")),
    (12, include_str!("../data/cubic_connected_n12.g6")),
];

const BIPARTITE_CUBIC_G6: [(usize, &str); 5] = [
    (6, include_str!("../data/bipartite_cubic_connected_n06.g6")),
    (8, include_str!("../data/bipartite_cubic_connected_n08.g6")),
    (10, include_str!("../data/bipartite_cubic_connected_n10.g6")),
    (12, include_str!("../data/bipartite_cubic_connected_n12.g6")),
    (14, include_str!("../data/bipartite_cubic_connected_n14.g6")),
];

const CUBIC_MULTI_EDGES: [(usize, &str); 3] = [
    (2, include_str!("../data/cubic_multigraphs_n02.edges")),
    (4, include_str!("../data/cubic_multigraphs_n04.edges")),
    (6, include_str!("../data/cubic_multigraphs_n06.edges")),
];

/// All connected cubic simple graphs on exactly `n` vertices (n = 4..=12).
pub fn cubic_connected(n: usize) -> Vec<Graph> {
    CUBIC_G6
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, text)| {
            parse_graph6_stream(text)
                .map(|g| g.expect("vendored data"))
                .collect()
        })
        .unwrap_or_default()
}

/// All connected bipartite cubic simple graphs on exactly `n` vertices
/// (n = 6..=14).
pub fn bipartite_cubic_connected(n: usize) -> Vec<Graph> {
    BIPARTITE_CUBIC_G6
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, text)| {
            parse_graph6_stream(text)
                .map(|g| g.expect("vendored data"))
                .collect()
        })
        .unwrap_or_default()
}

/// All connected cubic loopless multigraphs with at least one parallel pair
/// on exactly `n` vertices (n = 2, 4, 6).
pub fn cubic_multigraphs(n: usize) -> Vec<Graph> {
    CUBIC_MULTI_EDGES
        .iter()
        .find(|(k, _)| *k == n)
        .map(|(_, text)| {
            text.split("\n\n")
                .filter(|b| !b.trim().is_empty())
                .map(|b| Graph::parse_edge_list(b).expect("vendored data"))
                .collect()
        })
        .unwrap_or_default()
}

fn named(name: &str, which: NamedGraph) -> CatalogEntry {
    CatalogEntry::new(name, make_named(&which).expect("fixed catalog parameters"))
}

impl Catalog {
    /// The default instance set: every named graph the checks mention, the
    /// exhaustive cubic listing for n <= 10 with the multigraph variants for
    /// n <= 6, and the bipartite cubic listing for n <= 14.
    pub fn default_catalog() -> Catalog {
        let named_entries = vec![
            named("K4", NamedGraph::Complete(4)),
            named("K6", NamedGraph::Complete(6)),
            named("K3,3", NamedGraph::CompleteBipartite(3, 3)),
            named("K4,4", NamedGraph::CompleteBipartite(4, 4)),
            named("C4", NamedGraph::Cycle(4)),
            named("C6", NamedGraph::Cycle(6)),
            named("Q3", NamedGraph::Cube),
            named("Heawood", NamedGraph::Heawood),
            named("Theta2", NamedGraph::Theta2),
            named("Bip4", NamedGraph::Bip4),
            named("Y5", NamedGraph::Y(2)),
            named("Y7", NamedGraph::Y(3)),
            named("B3", NamedGraph::B(3)),
            named("B4", NamedGraph::B(4)),
            named("K33+e", NamedGraph::K33PlusEdge),
            named("B3+e", NamedGraph::BPlusEdge(3)),
        ];
        let mut cubic_small = Vec::new();
        for n in [4, 6, 8, 10] {
            for (i, g) in cubic_connected(n).into_iter().enumerate() {
                cubic_small.push(CatalogEntry::new(format!("cubic-n{}-{}", n, i), g));
            }
        }
        for n in [2, 4, 6] {
            for (i, g) in cubic_multigraphs(n).into_iter().enumerate() {
                cubic_small.push(CatalogEntry::new(format!("multi-n{}-{}", n, i), g));
            }
        }
        let mut bipartite_cubic = Vec::new();
        for n in [6, 8, 10, 12, 14] {
            for (i, g) in bipartite_cubic_connected(n).into_iter().enumerate() {
                bipartite_cubic.push(CatalogEntry::new(format!("bipcubic-n{}-{}", n, i), g));
            }
        }
        let twocut_set = ["C4", "C6", "Theta2", "K4", "star(K4,K4)", "Q3", "K3,3"]
            .map(String::from)
            .to_vec();
        Catalog {
            named: named_entries,
            cubic_small,
            bipartite_cubic,
            twocut_set,
        }
    }

    pub fn named(&self, name: &str) -> Option<&Graph> {
        self.named.iter().find(|e| e.name == name).map(|e| &e.graph)
    }

    /// Replaces a named entry's graph, keeping the original claims.
    /// Used by negative controls to plant a corrupted instance.
    pub fn replace_named(&mut self, name: &str, graph: Graph) {
        for e in &mut self.named {
            if e.name == name {
                e.graph = graph;
                return;
            }
        }
        panic!("no catalog entry named {}", name);
    }

    /// Every entry claimed cubic: named cubic instances plus the exhaustive
    /// small-cubic listing.
    pub fn cubic_entries(&self) -> Vec<&CatalogEntry> {
        self.named
            .iter()
            .filter(|e| e.claimed_cubic)
            .chain(self.cubic_small.iter())
            .collect()
    }
}
