//! Graph operations: star products, 2-cut connections, Y-extensions and
//! their compositions.
//!
//! Vertex numbering after an operation is always dense and order-preserving
//! (first factor's surviving vertices, then the second's); the returned maps
//! let callers keep addressing vertices of the original factors.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeCut, Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNotThree { vertex: usize, degree: usize },
    #[error("vertex {0} has a parallel edge")]
    MultiedgeAtVertex(usize),
    #[error("edge {0} does not exist")]
    EdgeMissing(usize),
    #[error("vertex {0} was consumed by an earlier star product")]
    StaleVertex(usize),
    #[error("pairing {0:?} is not a permutation of 0..3")]
    BadPairing([usize; 3]),
    #[error("factor is the cubic graph on two vertices (pass allow_theta to permit the identity)")]
    ThetaFactor,
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("principal cut is not a valid edge cut: {0}")]
    InvalidCut(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn is_theta2(g: &Graph) -> bool {
    g.n() == 2 && g.m() == 3
}

/// A star product specification: delete `v1` from `g1` and `v2` from `g2`
/// (both of degree 3) and join the dangling neighbour pairs. `pairing[i]`
/// matches the i-th half-edge at `v1` (incident edges ascending) with the
/// `pairing[i]`-th half-edge at `v2`, so multiedge neighbourhoods are
/// well-defined.
pub struct StarSpec<'a> {
    pub g1: &'a Graph,
    pub v1: usize,
    pub g2: &'a Graph,
    pub v2: usize,
    pub pairing: [usize; 3],
    /// A star product with the cubic graph on two vertices is the identity;
    /// it is refused unless explicitly allowed.
    pub allow_theta: bool,
}

impl<'a> StarSpec<'a> {
    pub fn new(g1: &'a Graph, v1: usize, g2: &'a Graph, v2: usize, pairing: [usize; 3]) -> Self {
        StarSpec {
            g1,
            v1,
            g2,
            v2,
            pairing,
            allow_theta: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct StarProduct {
    pub graph: Graph,
    /// The three new edges; they separate the two factor sides.
    pub principal_cut: EdgeCut,
    pub map1: Vec<Option<usize>>,
    pub map2: Vec<Option<usize>>,
}

pub fn star_product(spec: &StarSpec) -> Result<StarProduct, ConstructError> {
    let StarSpec {
        g1,
        v1,
        g2,
        v2,
        pairing,
        allow_theta,
    } = *spec;
    if v1 >= g1.n() {
        return Err(ConstructError::BadVertex(v1));
    }
    if v2 >= g2.n() {
        return Err(ConstructError::BadVertex(v2));
    }
    if g1.deg(v1) != 3 {
        return Err(ConstructError::DegreeNotThree {
            vertex: v1,
            degree: g1.deg(v1),
        });
    }
    if g2.deg(v2) != 3 {
        return Err(ConstructError::DegreeNotThree {
            vertex: v2,
            degree: g2.deg(v2),
        });
    }
    if !allow_theta && (is_theta2(g1) || is_theta2(g2)) {
        return Err(ConstructError::ThetaFactor);
    }
    let mut sorted = pairing;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(ConstructError::BadPairing(pairing));
    }

    let map1: Vec<Option<usize>> = (0..g1.n())
        .map(|w| {
            if w == v1 {
                None
            } else {
                Some(w - usize::from(w > v1))
            }
        })
        .collect();
    let off = g1.n() - 1;
    let map2: Vec<Option<usize>> = (0..g2.n())
        .map(|w| {
            if w == v2 {
                None
            } else {
                Some(off + w - usize::from(w > v2))
            }
        })
        .collect();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for e in g1.edges() {
        if e.u != v1 && e.v != v1 {
            pairs.push((map1[e.u].unwrap(), map1[e.v].unwrap()));
        }
    }
    for e in g2.edges() {
        if e.u != v2 && e.v != v2 {
            pairs.push((map2[e.u].unwrap(), map2[e.v].unwrap()));
        }
    }
    // half-edges at the deleted vertices, in edge-id order; the far end of
    // each becomes a cut stub
    let stub = |g: &Graph, map: &[Option<usize>], h: &crate::graph::HalfEdge| {
        let (u, w) = g.endpoints(h.edge);
        map[if h.end == 0 { w } else { u }].unwrap()
    };
    let stubs1: Vec<usize> = g1
        .incident_half_edges(v1)
        .iter()
        .map(|h| stub(g1, &map1, h))
        .collect();
    let stubs2: Vec<usize> = g2
        .incident_half_edges(v2)
        .iter()
        .map(|h| stub(g2, &map2, h))
        .collect();
    let first_cut_edge = pairs.len();
    for i in 0..3 {
        pairs.push((stubs1[i], stubs2[pairing[i]]));
    }
    let graph = Graph::new(g1.n() + g2.n() - 2, pairs)?;
    let cut_ids: Vec<usize> = (first_cut_edge..first_cut_edge + 3).collect();
    let principal_cut =
        EdgeCut::new(&graph, cut_ids).map_err(|e| ConstructError::InvalidCut(e.to_string()))?;
    Ok(StarProduct {
        graph,
        principal_cut,
        map1,
        map2,
    })
}

/// Orientation of the two new edges of a 2-cut connection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// x1-x2 and y1-y2
    Straight,
    /// x1-y2 and y1-x2
    Crossed,
}

/// A 2-cut connection: delete edge `e1 = x1y1` from `g1` and `e2 = x2y2`
/// from `g2`, then reconnect the four endpoints across the factors.
pub struct TwoCutSpec<'a> {
    pub g1: &'a Graph,
    pub e1: usize,
    pub g2: &'a Graph,
    pub e2: usize,
    pub orientation: Orientation,
}

#[derive(Debug, Clone)]
pub struct TwoCutProduct {
    pub graph: Graph,
    /// The two new edges.
    pub principal_cut: EdgeCut,
    pub map1: Vec<usize>,
    pub map2: Vec<usize>,
}

pub fn two_cut_connection(spec: &TwoCutSpec) -> Result<TwoCutProduct, ConstructError> {
    let TwoCutSpec {
        g1,
        e1,
        g2,
        e2,
        orientation,
    } = *spec;
    if e1 >= g1.m() {
        return Err(ConstructError::EdgeMissing(e1));
    }
    if e2 >= g2.m() {
        return Err(ConstructError::EdgeMissing(e2));
    }
    let map1: Vec<usize> = (0..g1.n()).collect();
    let map2: Vec<usize> = (0..g2.n()).map(|w| w + g1.n()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (id, e) in g1.edges().iter().enumerate() {
        if id != e1 {
            pairs.push((e.u, e.v));
        }
    }
    for (id, e) in g2.edges().iter().enumerate() {
        if id != e2 {
            pairs.push((map2[e.u], map2[e.v]));
        }
    }
    let (x1, y1) = g1.endpoints(e1);
    let (x2, y2) = g2.endpoints(e2);
    let first_cut_edge = pairs.len();
    match orientation {
        Orientation::Straight => {
            pairs.push((x1, map2[x2]));
            pairs.push((y1, map2[y2]));
        }
        Orientation::Crossed => {
            pairs.push((x1, map2[y2]));
            pairs.push((y1, map2[x2]));
        }
    }
    let graph = Graph::new(g1.n() + g2.n(), pairs)?;
    let cut_ids: Vec<usize> = (first_cut_edge..first_cut_edge + 2).collect();
    let principal_cut =
        EdgeCut::new(&graph, cut_ids).map_err(|e| ConstructError::InvalidCut(e.to_string()))?;
    Ok(TwoCutProduct {
        graph,
        principal_cut,
        map1,
        map2,
    })
}

#[derive(Debug, Clone)]
pub struct YExtension {
    pub graph: Graph,
    pub map: Vec<Option<usize>>,
    /// The three vertices of the new triangle, in half-edge order of the
    /// expanded vertex.
    pub triangle: [usize; 3],
}

/// Expands a degree-3 vertex into a triangle; equivalent to a star product
/// with K4.
pub fn y_extension(g: &Graph, v: usize) -> Result<YExtension, ConstructError> {
    if v >= g.n() {
        return Err(ConstructError::BadVertex(v));
    }
    if g.deg(v) != 3 {
        return Err(ConstructError::DegreeNotThree {
            vertex: v,
            degree: g.deg(v),
        });
    }
    if g.has_parallel_at(v) {
        return Err(ConstructError::MultiedgeAtVertex(v));
    }
    let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let spec = StarSpec::new(g, v, &k4, 0, [0, 1, 2]);
    let star = star_product(&spec)?;
    let t = [
        star.map2[1].unwrap(),
        star.map2[2].unwrap(),
        star.map2[3].unwrap(),
    ];
    Ok(YExtension {
        graph: star.graph,
        map: star.map1,
        triangle: t,
    })
}

/// One step of a repeated star product. `at` names a vertex of the original
/// base graph; it is translated through the composed maps of the previous
/// steps.
pub struct StarStep<'a> {
    pub at: usize,
    pub attach: &'a Graph,
    pub attach_at: usize,
    pub pairing: [usize; 3],
}

#[derive(Debug, Clone)]
pub struct RepeatedStar {
    pub graph: Graph,
    /// Composed base-graph old-to-new vertex map.
    pub base_map: Vec<Option<usize>>,
    /// Principal cut of each step, translated to the final graph is not
    /// tracked; cuts are those of the moment each step was applied.
    pub cuts: Vec<Vec<usize>>,
}

/// Left-fold of star products over the base graph. An empty `ops` list
/// returns the base unchanged.
pub fn repeated_star(base: &Graph, ops: &[StarStep]) -> Result<RepeatedStar, ConstructError> {
    let mut graph = base.clone();
    let mut base_map: Vec<Option<usize>> = (0..base.n()).map(Some).collect();
    let mut cuts = Vec::new();
    for op in ops {
        if op.at >= base.n() {
            return Err(ConstructError::BadVertex(op.at));
        }
        let Some(cur) = base_map[op.at] else {
            return Err(ConstructError::StaleVertex(op.at));
        };
        let spec = StarSpec::new(&graph, cur, op.attach, op.attach_at, op.pairing);
        let star = star_product(&spec)?;
        base_map = base_map
            .iter()
            .map(|slot| slot.and_then(|w| star.map1[w]))
            .collect();
        cuts.push(star.principal_cut.edges().to_vec());
        graph = star.graph;
    }
    Ok(RepeatedStar {
        graph,
        base_map,
        cuts,
    })
}

/// Splits a graph along a 3-edge cut into the two star factors that
/// reproduce it: each side keeps its induced subgraph plus a new degree-3
/// vertex attached to the cut stubs in cut-edge order, so rebuilding with
/// the identity pairing yields the original graph up to relabelling.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub g1: Graph,
    pub v1: usize,
    pub g2: Graph,
    pub v2: usize,
    /// old vertex -> g1 vertex (side A)
    pub map1: Vec<Option<usize>>,
    /// old vertex -> g2 vertex (side B)
    pub map2: Vec<Option<usize>>,
}

pub fn decompose_along_cut(g: &Graph, cut: &EdgeCut) -> Result<Decomposition, ConstructError> {
    if cut.edges().len() != 3 {
        return Err(ConstructError::InvalidCut(format!(
            "expected a 3-edge cut, got {} edges",
            cut.edges().len()
        )));
    }
    let (side_a, side_b) = cut.sides();
    let build = |side: &[usize]| -> (Graph, usize, Vec<Option<usize>>) {
        let mut map: Vec<Option<usize>> = vec![None; g.n()];
        for (new, &old) in side.iter().enumerate() {
            map[old] = Some(new);
        }
        let hub = side.len();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for e in g.edges() {
            if let (Some(u), Some(v)) = (map[e.u], map[e.v]) {
                pairs.push((u, v));
            }
        }
        for &ce in cut.edges() {
            let (u, v) = g.endpoints(ce);
            let inside = if map[u].is_some() {
                map[u].unwrap()
            } else {
                map[v].unwrap()
            };
            pairs.push((inside, hub));
        }
        (Graph::new(side.len() + 1, pairs).unwrap(), hub, map)
    };
    let (g1, v1, map1) = build(side_a);
    let (g2, v2, map2) = build(side_b);
    Ok(Decomposition {
        g1,
        v1,
        g2,
        v2,
        map1,
        map2,
    })
}

/// All 3-edge cuts of `g` with both sides containing at least two vertices.
pub fn nontrivial_three_cuts(g: &Graph) -> Vec<EdgeCut> {
    let m = g.m();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if let Ok(cut) = EdgeCut::new(g, vec![a, b, c]) {
                    if cut.sides().0.len() >= 2 && cut.sides().1.len() >= 2 {
                        out.push(cut);
                    }
                }
            }
        }
    }
    out
}
