//! Named graph families with documented, reproducible vertex numbering.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NamedError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for {family}: {msg}")]
    BadParams { family: &'static str, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// K_n on vertices 0..n, edges in lexicographic order.
    Complete(usize),
    /// K_{a,b} with parts 0..a and a..a+b, edges in lexicographic order.
    CompleteBipartite(usize, usize),
    /// Cycle 0-1-...-(n-1)-0; n = 2 gives a doubled edge.
    Cycle(usize),
    /// The 3-cube on vertices 0..8 read as bit strings.
    Cube,
    /// Heawood graph: cycle 0..14 plus chords {i, i+5 mod 14} for even i.
    Heawood,
    /// The cubic graph on two vertices (a triple edge).
    Theta2,
    /// The unique bipartite cubic graph on 4 vertices:
    /// parts {0,1} | {2,3}, edges 02, 02, 03, 12, 13, 13.
    Bip4,
    /// Y_{2n+1}: K_{2n+1} on vertices 1..2n+2 plus vertex 0 joined to 1, 2, 3.
    Y(usize),
    /// B_n: parts u_0..u_n = 0..n+1 and v_0..v_n = n+1..2n+2, with
    /// u_0 ~ v_1,v_2,v_3, v_0 ~ u_1,u_2,u_3 and u_i ~ v_j for i,j in 1..=n.
    B(usize),
    /// K_{3,3} plus an edge between vertices 0 and 1 (same partite set).
    K33PlusEdge,
    /// B_n plus the edge v_{n-1} v_n (non-bipartite, non-regular).
    BPlusEdge(usize),
}

pub fn make_named(which: &NamedGraph) -> Result<Graph, NamedError> {
    match *which {
        NamedGraph::Complete(n) => {
            if n < 1 {
                return Err(NamedError::BadParams {
                    family: "K_n",
                    msg: "need n >= 1".into(),
                });
            }
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            Ok(Graph::new(n, pairs).unwrap())
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(NamedError::BadParams {
                    family: "K_{a,b}",
                    msg: "need a, b >= 1".into(),
                });
            }
            let mut pairs = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    pairs.push((u, a + v));
                }
            }
            Ok(Graph::new(a + b, pairs).unwrap())
        }
        NamedGraph::Cycle(n) => {
            if n < 2 {
                return Err(NamedError::BadParams {
                    family: "C_n",
                    msg: "need n >= 2".into(),
                });
            }
            let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::new(n, pairs).unwrap())
        }
        NamedGraph::Cube => {
            let mut pairs = Vec::new();
            for v in 0..8usize {
                for bit in [1usize, 2, 4] {
                    let w = v ^ bit;
                    if v < w {
                        pairs.push((v, w));
                    }
                }
            }
            Ok(Graph::new(8, pairs).unwrap())
        }
        NamedGraph::Heawood => {
            let mut pairs: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            for i in (0..14).step_by(2) {
                pairs.push((i, (i + 5) % 14));
            }
            Ok(Graph::new(14, pairs).unwrap())
        }
        NamedGraph::Theta2 => Ok(Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()),
        NamedGraph::Bip4 => {
            Ok(Graph::new(4, vec![(0, 2), (0, 2), (0, 3), (1, 2), (1, 3), (1, 3)]).unwrap())
        }
        NamedGraph::Y(n) => {
            if n < 2 {
                return Err(NamedError::BadParams {
                    family: "Y(n)",
                    msg: "need n >= 2 (Y_5 is the smallest)".into(),
                });
            }
            let order = 2 * n + 2; // v_0 plus K_{2n+1}
            let mut pairs = vec![(0, 1), (0, 2), (0, 3)];
            for u in 1..order {
                for v in u + 1..order {
                    pairs.push((u, v));
                }
            }
            Ok(Graph::new(order, pairs).unwrap())
        }
        NamedGraph::B(n) => Ok(Graph::new(2 * n + 2, b_edges(n)?).unwrap()),
        NamedGraph::K33PlusEdge => {
            let mut pairs = Vec::new();
            for u in 0..3 {
                for v in 3..6 {
                    pairs.push((u, v));
                }
            }
            pairs.push((0, 1));
            Ok(Graph::new(6, pairs).unwrap())
        }
        NamedGraph::BPlusEdge(n) => {
            let mut pairs = b_edges(n)?;
            // v_{n-1} and v_n are vertices (n+1)+(n-1) and (n+1)+n
            pairs.push((2 * n, 2 * n + 1));
            Ok(Graph::new(2 * n + 2, pairs).unwrap())
        }
    }
}

fn b_edges(n: usize) -> Result<Vec<(usize, usize)>, NamedError> {
    if n < 3 {
        return Err(NamedError::BadParams {
            family: "B(n)",
            msg: "need n >= 3".into(),
        });
    }
    let u = |i: usize| i; // u_0..u_n
    let v = |j: usize| n + 1 + j; // v_0..v_n
    let mut pairs = vec![(u(0), v(1)), (u(0), v(2)), (u(0), v(3))];
    pairs.extend([(v(0), u(1)), (v(0), u(2)), (v(0), u(3))].map(|(a, b)| (b.min(a), b.max(a))));
    for i in 1..=n {
        for j in 1..=n {
            pairs.push((u(i), v(j)));
        }
    }
    Ok(pairs)
}

/// Parses a catalog name: `K4`, `K3,3`, `C6`, `Q3`, `Heawood`, `Theta2`,
/// `Bip4`, `Y(2)`, `B(3)`, `K33+e`, `B(3)+e`.
pub fn parse_name(name: &str) -> Result<NamedGraph, NamedError> {
    let s = name.trim();
    let unknown = || NamedError::UnknownName(s.to_string());
    match s {
        "Q3" | "cube" => return Ok(NamedGraph::Cube),
        "Heawood" | "heawood" => return Ok(NamedGraph::Heawood),
        "Theta2" | "theta2" => return Ok(NamedGraph::Theta2),
        "Bip4" | "bip4" => return Ok(NamedGraph::Bip4),
        "K33+e" | "K3,3+e" => return Ok(NamedGraph::K33PlusEdge),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("Y(").and_then(|r| r.strip_suffix(')')) {
        let n = rest.parse().map_err(|_| unknown())?;
        return Ok(NamedGraph::Y(n));
    }
    if let Some(rest) = s.strip_prefix("B(") {
        if let Some(r) = rest.strip_suffix(")+e") {
            let n = r.parse().map_err(|_| unknown())?;
            return Ok(NamedGraph::BPlusEdge(n));
        }
        if let Some(r) = rest.strip_suffix(')') {
            let n = r.parse().map_err(|_| unknown())?;
            return Ok(NamedGraph::B(n));
        }
        return Err(unknown());
    }
    if let Some(rest) = s.strip_prefix('K') {
        if let Some((a, b)) = rest.split_once(',') {
            let a = a.parse().map_err(|_| unknown())?;
            let b = b.parse().map_err(|_| unknown())?;
            return Ok(NamedGraph::CompleteBipartite(a, b));
        }
        let n = rest.parse().map_err(|_| unknown())?;
        return Ok(NamedGraph::Complete(n));
    }
    if let Some(rest) = s.strip_prefix('C') {
        let n = rest.parse().map_err(|_| unknown())?;
        return Ok(NamedGraph::Cycle(n));
    }
    Err(unknown())
}

/// Names accepted by `parse_name`, for CLI listings.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "K<n>", "K<a>,<b>", "C<n>", "Q3", "Heawood", "Theta2", "Bip4", "Y(<n>)", "B(<n>)", "K33+e",
        "B(<n>)+e",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_is_the_girth_six_cage() {
        let g = make_named(&NamedGraph::Heawood).unwrap();
        assert_eq!((g.n(), g.m()), (14, 21));
        assert!(g.is_cubic());
        assert!(g.is_bipartite().is_some());
        assert_eq!(g.girth(), Some(6));
        assert!(g.is_connected());
    }

    #[test]
    fn y5_shape() {
        let g = make_named(&NamedGraph::Y(2)).unwrap();
        assert_eq!(g.n(), 6);
        let mut degs: Vec<usize> = (0..6).map(|v| g.deg(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 4, 4, 5, 5, 5]);
        assert_eq!(g.deg(0), 3);
        assert_eq!(g.incident_edges(0), &[0, 1, 2]);
        assert!(g.is_bipartite().is_none());
    }

    #[test]
    fn b3_shape() {
        let g = make_named(&NamedGraph::B(3)).unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_bipartite().is_some());
        assert_eq!(g.deg(0), 3); // u_0
        assert_eq!(g.deg(4), 3); // v_0
        for v in [1, 2, 3, 5, 6, 7] {
            assert_eq!(g.deg(v), 4);
        }
    }

    #[test]
    fn b_plus_edge_is_not_bipartite() {
        let g = make_named(&NamedGraph::BPlusEdge(3)).unwrap();
        assert!(g.is_bipartite().is_none());
        assert!(!g.is_regular(3));
    }

    #[test]
    fn bip4_matches_its_fixed_edge_list() {
        let g = make_named(&NamedGraph::Bip4).unwrap();
        assert_eq!(g.write_edge_list(), "4 6\n0 2\n0 2\n0 3\n1 2\n1 3\n1 3\n");
        assert!(g.is_cubic());
        assert!(g.is_bipartite().is_some());
        assert_eq!(g.girth(), Some(2));
    }

    #[test]
    fn cube_is_bipartite_girth_four() {
        let g = make_named(&NamedGraph::Cube).unwrap();
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Some(4));
        assert!(g.is_bipartite().is_some());
    }

    #[test]
    fn name_parsing() {
        assert_eq!(parse_name("K4").unwrap(), NamedGraph::Complete(4));
        assert_eq!(
            parse_name("K3,3").unwrap(),
            NamedGraph::CompleteBipartite(3, 3)
        );
        assert_eq!(parse_name("C6").unwrap(), NamedGraph::Cycle(6));
        assert_eq!(parse_name("Y(2)").unwrap(), NamedGraph::Y(2));
        assert_eq!(parse_name("B(3)+e").unwrap(), NamedGraph::BPlusEdge(3));
        assert_eq!(parse_name("K33+e").unwrap(), NamedGraph::K33PlusEdge);
        assert!(parse_name("nonsense").is_err());
        assert!(matches!(
            make_named(&NamedGraph::Y(1)),
            Err(NamedError::BadParams { .. })
        ));
    }
}
