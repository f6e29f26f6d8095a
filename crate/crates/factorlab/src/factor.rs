//! Enumeration of perfect matchings, 2-factors and Hamiltonian extensions.
//!
//! Enumeration order is fixed: the search always branches on the
//! lowest-indexed unsaturated vertex and tries candidate edges by ascending
//! id, so streams are deterministic and certificates reproducible.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge set is not a perfect matching: {0}")]
    NotPerfect(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("work bound exceeded after {0} search nodes")]
    WorkBoundExceeded(u64),
    #[error("graph too large for the search engine: {0}")]
    TooLarge(String),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("edge {0} out of range")]
    BadEdge(usize),
    #[error("vertex {0} has degree {1}, need at least 2")]
    DegreeTooSmall(usize, usize),
}

/// Search budget for the enumeration engines.
#[derive(Debug, Clone, Copy)]
pub struct EngineConfig {
    /// Maximum number of search nodes per enumeration run.
    pub node_cap: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            node_cap: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
}

/// A perfect matching, stored as sorted edge ids. Parallel edges are
/// distinct, so a multiedge pair yields distinct matchings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    /// Validates that `edges` is a perfect matching of `g`.
    pub fn new(g: &Graph, mut edges: Vec<usize>) -> Result<Matching, EngineError> {
        edges.sort_unstable();
        let mut cover = vec![0u8; g.n()];
        for &e in &edges {
            if e >= g.m() {
                return Err(EngineError::BadEdge(e));
            }
            let (u, v) = g.endpoints(e);
            cover[u] += 1;
            cover[v] += 1;
        }
        for (v, &c) in cover.iter().enumerate() {
            if c == 0 {
                return Err(EngineError::NotPerfect(format!("vertex {} uncovered", v)));
            }
            if c > 1 {
                return Err(EngineError::NotPerfect(format!(
                    "vertex {} covered twice",
                    v
                )));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// A spanning 2-regular subgraph together with its cycle decomposition.
/// Components are vertex sequences; each starts at its smallest vertex and
/// they are listed by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    edges: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl TwoFactor {
    pub fn new(g: &Graph, mut edges: Vec<usize>) -> Result<TwoFactor, EngineError> {
        edges.sort_unstable();
        let mut deg = vec![0u8; g.n()];
        for &e in &edges {
            if e >= g.m() {
                return Err(EngineError::BadEdge(e));
            }
            let (u, v) = g.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = deg.iter().position(|&d| d != 2) {
            return Err(EngineError::NotPerfect(format!(
                "vertex {} has degree {} in the subgraph, need 2",
                v, deg[v]
            )));
        }
        let components = cycle_decomposition(g, &edges);
        Ok(TwoFactor { edges, components })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.components.len() == 1
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True iff every component cycle has even length (a 2-cycle formed by a
    /// parallel pair counts as even).
    pub fn all_cycles_even(&self) -> bool {
        self.components.iter().all(|c| c.len() % 2 == 0)
    }

    pub fn has_two_cycle(&self) -> bool {
        self.components.iter().any(|c| c.len() == 2)
    }
}

/// Decomposes a spanning 2-regular edge set into vertex cycles.
/// Every cycle starts at its smallest vertex and leaves it by the
/// lower-id edge; cycles are ordered by smallest vertex.
fn cycle_decomposition(g: &Graph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        at[u].push(e);
        at[v].push(e);
    }
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        if seen[s] || at[s].is_empty() {
            continue;
        }
        let mut cycle = vec![s];
        seen[s] = true;
        let mut prev_edge = usize::MAX;
        let mut v = s;
        loop {
            let e = *at[v].iter().find(|&&e| e != prev_edge).expect("degree 2");
            let w = g.other_end(e, v);
            if w == s {
                break;
            }
            cycle.push(w);
            seen[w] = true;
            prev_edge = e;
            v = w;
        }
        cycles.push(cycle);
    }
    cycles
}

/// A Hamiltonian extension: `base` and `partner` are disjoint perfect
/// matchings whose union induces a single spanning cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub base: Matching,
    pub partner: Matching,
}

/// True iff `edges` induces a single spanning cycle of `g`.
pub fn is_hamiltonian_cycle(g: &Graph, edges: &[usize]) -> bool {
    let mut deg = vec![0u8; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    cycle_decomposition(g, edges).len() == 1
}

// ---------------------------------------------------------------------------
// Perfect matching enumeration
// ---------------------------------------------------------------------------

struct PmFrame {
    v: usize,
    idx: usize,
    chosen: Option<usize>,
}

/// Budgeted resumable depth-first enumeration of perfect matchings.
pub struct PmEnumerator<'g> {
    g: &'g Graph,
    forbidden: Vec<bool>,
    covered: u64,
    full: u64,
    chosen: Vec<usize>,
    stack: Vec<PmFrame>,
    started: bool,
    pub nodes: u64,
    node_cap: u64,
}

impl<'g> PmEnumerator<'g> {
    pub fn new(
        g: &'g Graph,
        forbidden_edges: &[usize],
        cfg: &EngineConfig,
    ) -> Result<Self, EngineError> {
        if g.n() > 64 {
            return Err(EngineError::TooLarge(format!("n = {} > 64", g.n())));
        }
        let mut forbidden = vec![false; g.m()];
        for &e in forbidden_edges {
            if e >= g.m() {
                return Err(EngineError::BadEdge(e));
            }
            forbidden[e] = true;
        }
        let full = if g.n() == 64 {
            u64::MAX
        } else {
            (1u64 << g.n()) - 1
        };
        Ok(PmEnumerator {
            g,
            forbidden,
            covered: 0,
            full,
            chosen: Vec::new(),
            stack: Vec::new(),
            started: false,
            nodes: 0,
            node_cap: cfg.node_cap,
        })
    }

    fn lowest_uncovered(&self) -> usize {
        (!self.covered & self.full).trailing_zeros() as usize
    }

    pub fn try_next(&mut self) -> Result<Option<Matching>, EngineError> {
        if !self.started {
            self.started = true;
            if self.g.n() % 2 == 1 {
                return Ok(None); // odd order: empty stream
            }
            if self.covered == self.full {
                return Ok(None);
            }
            self.stack.push(PmFrame {
                v: self.lowest_uncovered(),
                idx: 0,
                chosen: None,
            });
        }
        loop {
            let Some(top) = self.stack.last_mut() else {
                return Ok(None);
            };
            if let Some(e) = top.chosen.take() {
                let (u, w) = self.g.endpoints(e);
                self.covered &= !(1u64 << u);
                self.covered &= !(1u64 << w);
                self.chosen.pop();
            }
            let v = top.v;
            let mut found = None;
            while top.idx < self.g.incident_edges(v).len() {
                let e = self.g.incident_edges(v)[top.idx];
                top.idx += 1;
                if self.forbidden[e] {
                    continue;
                }
                let w = self.g.other_end(e, v);
                if self.covered >> w & 1 == 0 {
                    found = Some((e, w));
                    break;
                }
            }
            match found {
                None => {
                    self.stack.pop();
                }
                Some((e, w)) => {
                    self.nodes += 1;
                    if self.nodes > self.node_cap {
                        return Err(EngineError::WorkBoundExceeded(self.nodes));
                    }
                    self.stack.last_mut().unwrap().chosen = Some(e);
                    self.covered |= 1u64 << v;
                    self.covered |= 1u64 << w;
                    self.chosen.push(e);
                    if self.covered == self.full {
                        let mut edges = self.chosen.clone();
                        edges.sort_unstable();
                        return Ok(Some(Matching { edges }));
                    }
                    self.stack.push(PmFrame {
                        v: self.lowest_uncovered(),
                        idx: 0,
                        chosen: None,
                    });
                }
            }
        }
    }
}

/// All perfect matchings of `g`, each exactly once, in deterministic order.
/// Unbudgeted; the deciders in [`crate::decide`] apply work bounds.
pub fn perfect_matchings(g: &Graph) -> impl Iterator<Item = Matching> + '_ {
    let e = PmEnumerator::new(g, &[], &EngineConfig { node_cap: u64::MAX })
        .expect("graph too large for enumeration");
    PmIter(e)
}

struct PmIter<'g>(PmEnumerator<'g>);

impl<'g> Iterator for PmIter<'g> {
    type Item = Matching;
    fn next(&mut self) -> Option<Matching> {
        self.0
            .try_next()
            .expect("unbudgeted enumeration cannot exceed the work bound")
    }
}

// ---------------------------------------------------------------------------
// 2-factor enumeration
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum EdgeState {
    Free,
    Chosen,
    Out,
}

struct TfFrame {
    v: usize,
    avail: Vec<usize>,
    need: usize,
    combo: Vec<usize>, // indices into avail; empty = not yet started
    applied_edges: Vec<usize>,
    applied_outs: Vec<usize>,
}

/// Budgeted resumable enumeration of 2-factors: branches on the
/// lowest-indexed vertex of degree < 2 and picks its remaining factor edges
/// among the still-undecided incident edges, pruning vertices that can no
/// longer reach degree 2.
pub struct TfEnumerator<'g> {
    g: &'g Graph,
    state: Vec<EdgeState>,
    deg_in: Vec<u8>,
    undecided: Vec<u32>,
    chosen: Vec<usize>,
    stack: Vec<TfFrame>,
    started: bool,
    done: bool,
    pub nodes: u64,
    node_cap: u64,
}

impl<'g> TfEnumerator<'g> {
    pub fn new(g: &'g Graph, cfg: &EngineConfig) -> Self {
        let undecided = (0..g.n()).map(|v| g.deg(v) as u32).collect();
        TfEnumerator {
            g,
            state: vec![EdgeState::Free; g.m()],
            deg_in: vec![0; g.n()],
            undecided,
            chosen: Vec::new(),
            stack: Vec::new(),
            started: false,
            done: false,
            nodes: 0,
            node_cap: cfg.node_cap,
        }
    }

    fn open_vertex(&self) -> Option<usize> {
        (0..self.g.n()).find(|&v| self.deg_in[v] < 2)
    }

    fn push_frame(&mut self, v: usize) -> bool {
        let avail: Vec<usize> = self
            .g
            .incident_edges(v)
            .iter()
            .copied()
            .filter(|&e| self.state[e] == EdgeState::Free)
            .collect();
        let need = (2 - self.deg_in[v]) as usize;
        if avail.len() < need {
            return false;
        }
        self.stack.push(TfFrame {
            v,
            avail,
            need,
            combo: Vec::new(),
            applied_edges: Vec::new(),
            applied_outs: Vec::new(),
        });
        true
    }

    fn undo_top(&mut self) {
        let top = self.stack.last_mut().unwrap();
        for &e in top.applied_outs.iter().rev() {
            self.state[e] = EdgeState::Free;
            let (u, w) = self.g.endpoints(e);
            self.undecided[u] += 1;
            self.undecided[w] += 1;
        }
        top.applied_outs.clear();
        for &e in top.applied_edges.iter().rev() {
            self.state[e] = EdgeState::Free;
            let (u, w) = self.g.endpoints(e);
            self.deg_in[u] -= 1;
            self.deg_in[w] -= 1;
            self.undecided[u] += 1;
            self.undecided[w] += 1;
            self.chosen.pop();
        }
        top.applied_edges.clear();
    }

    /// Advances `combo` to the next index combination; false when exhausted.
    fn next_combo(frame: &mut TfFrame) -> bool {
        let k = frame.need;
        let n = frame.avail.len();
        if frame.combo.is_empty() {
            if n < k {
                return false;
            }
            frame.combo = (0..k).collect();
            return true;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if frame.combo[i] < n - k + i {
                frame.combo[i] += 1;
                for j in i + 1..k {
                    frame.combo[j] = frame.combo[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    /// Applies the current combo; false if it violates degree bounds or
    /// strands some vertex below degree 2.
    fn apply_top(&mut self) -> bool {
        let (v, picks): (usize, Vec<usize>) = {
            let top = self.stack.last().unwrap();
            (top.v, top.combo.iter().map(|&i| top.avail[i]).collect())
        };
        for (k, &e) in picks.iter().enumerate() {
            let w = self.g.other_end(e, v);
            if self.deg_in[w] >= 2 {
                for &e2 in picks[..k].iter().rev() {
                    let w2 = self.g.other_end(e2, v);
                    self.state[e2] = EdgeState::Free;
                    self.deg_in[v] -= 1;
                    self.deg_in[w2] -= 1;
                    self.undecided[v] += 1;
                    self.undecided[w2] += 1;
                    self.chosen.pop();
                }
                return false;
            }
            self.state[e] = EdgeState::Chosen;
            self.deg_in[v] += 1;
            self.deg_in[w] += 1;
            self.undecided[v] -= 1;
            self.undecided[w] -= 1;
            self.chosen.push(e);
        }
        let top = self.stack.last_mut().unwrap();
        top.applied_edges = picks;
        // v is saturated: every other free incident edge is now out
        let outs: Vec<usize> = self
            .g
            .incident_edges(v)
            .iter()
            .copied()
            .filter(|&e| self.state[e] == EdgeState::Free)
            .collect();
        for &e in &outs {
            self.state[e] = EdgeState::Out;
            let (u, w) = self.g.endpoints(e);
            self.undecided[u] -= 1;
            self.undecided[w] -= 1;
        }
        self.stack.last_mut().unwrap().applied_outs = outs.clone();
        // residue prune: every touched vertex must still be able to reach 2
        let mut touched: Vec<usize> = outs
            .iter()
            .map(|&e| {
                let (u, w) = self.g.endpoints(e);
                if u == v {
                    w
                } else {
                    u
                }
            })
            .collect();
        for &e in &self.stack.last().unwrap().applied_edges {
            touched.push(self.g.other_end(e, v));
        }
        for &u in &touched {
            if (self.deg_in[u] as u32) < 2 && self.deg_in[u] as u32 + self.undecided[u] < 2 {
                self.undo_top();
                return false;
            }
        }
        true
    }

    pub fn try_next(&mut self) -> Result<Option<TwoFactor>, EngineError> {
        if self.done {
            return Ok(None);
        }
        if !self.started {
            self.started = true;
            match self.open_vertex() {
                None => {
                    // only possible for the empty graph on >= 1 vertices
                    self.done = true;
                    return Ok(None);
                }
                Some(v) => {
                    if !self.push_frame(v) {
                        self.done = true;
                        return Ok(None);
                    }
                }
            }
        } else {
            // resume: undo the emission state of the top frame
            self.undo_top();
        }
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return Ok(None);
            };
            let has_next = Self::next_combo(top);
            if !has_next {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.undo_top();
                }
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_cap {
                return Err(EngineError::WorkBoundExceeded(self.nodes));
            }
            if !self.apply_top() {
                continue;
            }
            match self.open_vertex() {
                None => {
                    let mut edges = self.chosen.clone();
                    edges.sort_unstable();
                    let components = cycle_decomposition(self.g, &edges);
                    return Ok(Some(TwoFactor { edges, components }));
                    // on resume, undo_top() reverts this frame's combo
                }
                Some(v) => {
                    if self.push_frame(v) {
                        continue;
                    }
                    // stranded vertex: revert this combo and try the next
                    self.undo_top();
                }
            }
        }
    }
}

/// All 2-factors of `g` with their cycle decompositions, deterministic order.
pub fn two_factors(g: &Graph) -> impl Iterator<Item = TwoFactor> + '_ {
    TfIter(TfEnumerator::new(g, &EngineConfig { node_cap: u64::MAX }))
}

struct TfIter<'g>(TfEnumerator<'g>);

impl<'g> Iterator for TfIter<'g> {
    type Item = TwoFactor;
    fn next(&mut self) -> Option<TwoFactor> {
        self.0
            .try_next()
            .expect("unbudgeted enumeration cannot exceed the work bound")
    }
}

// ---------------------------------------------------------------------------
// Hamiltonian extensions
// ---------------------------------------------------------------------------

/// All perfect matchings `N` disjoint from `m` such that `m ∪ N` induces a
/// Hamiltonian cycle, by enumerating perfect matchings of `G - m`.
pub fn extensions_of(g: &Graph, m: &Matching) -> Result<Vec<Extension>, EngineError> {
    extensions_of_with(g, m, &EngineConfig::default()).map(|(ext, _)| ext)
}

pub fn extensions_of_with(
    g: &Graph,
    m: &Matching,
    cfg: &EngineConfig,
) -> Result<(Vec<Extension>, SearchStats), EngineError> {
    Matching::new(g, m.edges().to_vec())?; // revalidate against g
    let mut en = PmEnumerator::new(g, m.edges(), cfg)?;
    let mut out = Vec::new();
    while let Some(n) = en.try_next()? {
        let mut union: Vec<usize> = m.edges().to_vec();
        union.extend_from_slice(n.edges());
        if is_hamiltonian_cycle(g, &union) {
            out.push(Extension {
                base: m.clone(),
                partner: n,
            });
        }
    }
    Ok((out, SearchStats { nodes: en.nodes }))
}

pub fn extension_count(g: &Graph, m: &Matching) -> Result<usize, EngineError> {
    extensions_of(g, m).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap()
    }

    fn c6() -> Graph {
        Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap()
    }

    fn theta2() -> Graph {
        Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn k4_has_three_matchings() {
        let g = k4();
        let pms: Vec<_> = perfect_matchings(&g).collect();
        assert_eq!(pms.len(), 3);
        // deterministic order: first matching pairs vertex 0 with vertex 1
        assert_eq!(pms[0].edges(), &[0, 5]);
    }

    #[test]
    fn theta2_has_one_matching_per_parallel_edge() {
        let g = theta2();
        let pms: Vec<_> = perfect_matchings(&g).collect();
        assert_eq!(pms.len(), 3);
    }

    #[test]
    fn odd_order_yields_empty_stream() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(perfect_matchings(&g).count(), 0);
    }

    #[test]
    fn c6_has_exactly_one_two_factor() {
        let g = c6();
        let tfs: Vec<_> = two_factors(&g).collect();
        assert_eq!(tfs.len(), 1);
        assert!(tfs[0].is_hamiltonian());
        assert_eq!(tfs[0].components()[0], vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn k4_two_factors_are_the_three_four_cycles() {
        let g = k4();
        let tfs: Vec<_> = two_factors(&g).collect();
        assert_eq!(tfs.len(), 3);
        assert!(tfs.iter().all(TwoFactor::is_hamiltonian));
    }

    #[test]
    fn theta2_two_factors_are_parallel_pairs() {
        let g = theta2();
        let tfs: Vec<_> = two_factors(&g).collect();
        assert_eq!(tfs.len(), 3);
        assert!(tfs.iter().all(|t| t.is_hamiltonian() && t.has_two_cycle()));
        assert!(tfs.iter().all(TwoFactor::all_cycles_even));
    }

    #[test]
    fn c6_matching_extends_uniquely() {
        let g = c6();
        let pms: Vec<_> = perfect_matchings(&g).collect();
        assert_eq!(pms.len(), 2);
        for m in &pms {
            let ext = extensions_of(&g, m).unwrap();
            assert_eq!(ext.len(), 1);
        }
    }

    #[test]
    fn k4_every_matching_has_two_extensions() {
        let g = k4();
        for m in perfect_matchings(&g) {
            assert_eq!(extension_count(&g, &m).unwrap(), 2);
        }
    }

    #[test]
    fn k33_every_matching_has_two_extensions() {
        let g = Graph::new(
            6,
            vec![
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let pms: Vec<_> = perfect_matchings(&g).collect();
        assert_eq!(pms.len(), 6);
        for m in &pms {
            assert_eq!(extension_count(&g, m).unwrap(), 2);
        }
    }

    #[test]
    fn extensions_reject_non_perfect_input() {
        let g = k4();
        let bogus = Matching { edges: vec![0] };
        assert!(matches!(
            extensions_of(&g, &bogus),
            Err(EngineError::NotPerfect(_))
        ));
    }

    #[test]
    fn work_bound_fires() {
        let g = k4();
        let mut en = PmEnumerator::new(&g, &[], &EngineConfig { node_cap: 1 }).unwrap();
        let mut err = None;
        loop {
            match en.try_next() {
                Ok(Some(_)) => continue,
                Ok(None) => break,
                Err(e) => {
                    err = Some(e);
                    break;
                }
            }
        }
        assert!(matches!(err, Some(EngineError::WorkBoundExceeded(_))));
    }
}
