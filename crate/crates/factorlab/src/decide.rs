//! Property deciders: PMH, 2FH, E2F, malleability, tight cuts and
//! edge-extension conditions, each with a machine-checkable certificate.

use std::time::Instant;

use serde::Serialize;

use crate::factor::{
    extensions_of_with, EngineConfig, EngineError, Extension, Matching, PmEnumerator, TfEnumerator,
    TwoFactor,
};
use crate::graph::{EdgeCut, Graph};

/// Verdict plus evidence. Certificates re-validate independently of the
/// search that produced them (see [`crate::certify`]).
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub stats: ReportStats,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportStats {
    pub nodes: u64,
    /// Set when a universally-quantified property holds because the graph
    /// has no object of the quantified kind (e.g. 2FH with no 2-factor).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    #[serde(default)]
    pub vacuous: bool,
    /// Set when the decision inspected a 2-factor containing a 2-cycle of
    /// parallel edges (multigraph reading of the definitions).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    #[serde(default)]
    pub multiedge_cycles: bool,
    /// Wall-clock time; excluded from serialized reports so JSON output is
    /// byte-stable across runs.
    #[serde(skip_serializing)]
    pub elapsed_micros: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A perfect matching with no Hamiltonian extension.
    FailingMatching { matching: Vec<usize> },
    /// A 2-factor with at least two components.
    DisconnectedTwoFactor {
        edges: Vec<usize>,
        components: Vec<Vec<usize>>,
    },
    /// A 2-factor containing an odd cycle.
    OddCycleTwoFactor {
        edges: Vec<usize>,
        odd_cycle: Vec<usize>,
    },
    /// A matching and an incident edge no extension of the matching covers.
    MalleabilityFailure {
        vertex: usize,
        matching: Vec<usize>,
        edge: usize,
    },
    /// Malleability refused outright: parallel edges at the vertex.
    MultiedgeAtVertex { vertex: usize },
    /// A perfect matching with exactly one Hamiltonian extension.
    UniqueExtension {
        matching: Vec<usize>,
        partner: Vec<usize>,
    },
    /// Exhaustive per-matching extension counts.
    ExtensionTable { rows: Vec<ExtensionRow> },
    /// A matching with no extension whose cycle contains the edge.
    NoExtensionThroughEdge { edge: usize, matching: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionRow {
    pub matching: Vec<usize>,
    pub extensions: usize,
}

fn finish(
    property: &str,
    verdict: bool,
    certificate: Option<Certificate>,
    nodes: u64,
    t0: Instant,
) -> PropertyReport {
    PropertyReport {
        property: property.into(),
        verdict,
        certificate,
        stats: ReportStats {
            nodes,
            elapsed_micros: t0.elapsed().as_micros(),
            ..Default::default()
        },
    }
}

/// First Hamiltonian extension of `m`, if any.
fn first_extension(
    g: &Graph,
    m: &Matching,
    cfg: &EngineConfig,
    nodes: &mut u64,
) -> Result<Option<Matching>, EngineError> {
    let mut en = PmEnumerator::new(g, m.edges(), cfg)?;
    let mut found = None;
    while let Some(n) = en.try_next()? {
        let mut union = m.edges().to_vec();
        union.extend_from_slice(n.edges());
        if crate::factor::is_hamiltonian_cycle(g, &union) {
            found = Some(n);
            break;
        }
    }
    *nodes += en.nodes;
    Ok(found)
}

/// PMH: every perfect matching extends to a Hamiltonian cycle.
/// Short-circuits on the first failing matching; `exhaustive` instead
/// tabulates every extension count.
pub fn is_pmh_with(
    g: &Graph,
    exhaustive: bool,
    cfg: &EngineConfig,
) -> Result<PropertyReport, EngineError> {
    let t0 = Instant::now();
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let mut nodes = 0u64;
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    let mut rows = Vec::new();
    let mut failing: Option<Matching> = None;
    while let Some(m) = pms.try_next()? {
        any = true;
        if exhaustive {
            let (ext, stats) = extensions_of_with(g, &m, cfg)?;
            nodes += stats.nodes;
            if ext.is_empty() && failing.is_none() {
                failing = Some(m.clone());
            }
            rows.push(ExtensionRow {
                matching: m.edges().to_vec(),
                extensions: ext.len(),
            });
        } else if first_extension(g, &m, cfg, &mut nodes)?.is_none() {
            failing = Some(m);
            break;
        }
    }
    nodes += pms.nodes;
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    let report = match failing {
        Some(m) => finish(
            "pmh",
            false,
            Some(Certificate::FailingMatching {
                matching: m.edges().to_vec(),
            }),
            nodes,
            t0,
        ),
        None => finish(
            "pmh",
            true,
            if exhaustive {
                Some(Certificate::ExtensionTable { rows })
            } else {
                None
            },
            nodes,
            t0,
        ),
    };
    Ok(report)
}

pub fn is_pmh(g: &Graph) -> Result<PropertyReport, EngineError> {
    is_pmh_with(g, false, &EngineConfig::default())
}

/// 2FH: every 2-factor is a Hamiltonian cycle. A graph with no 2-factor is
/// vacuously 2FH (flagged in the stats).
pub fn is_2fh(g: &Graph) -> PropertyReport {
    let t0 = Instant::now();
    let mut en = TfEnumerator::new(g, &EngineConfig { node_cap: u64::MAX });
    let mut any = false;
    let mut multiedge_cycles = false;
    let mut bad: Option<TwoFactor> = None;
    while let Some(tf) = en.try_next().expect("unbounded") {
        any = true;
        multiedge_cycles |= tf.has_two_cycle();
        if !tf.is_hamiltonian() {
            bad = Some(tf);
            break;
        }
    }
    let mut report = match bad {
        Some(tf) => finish(
            "2fh",
            false,
            Some(Certificate::DisconnectedTwoFactor {
                edges: tf.edges().to_vec(),
                components: tf.components().to_vec(),
            }),
            en.nodes,
            t0,
        ),
        None => finish("2fh", true, None, en.nodes, t0),
    };
    report.stats.vacuous = !any;
    report.stats.multiedge_cycles = multiedge_cycles;
    report
}

/// E2F: every cycle of every 2-factor has even length (2-cycles of parallel
/// edges count as even).
pub fn is_e2f(g: &Graph) -> PropertyReport {
    let t0 = Instant::now();
    let mut en = TfEnumerator::new(g, &EngineConfig { node_cap: u64::MAX });
    let mut any = false;
    let mut multiedge_cycles = false;
    let mut bad: Option<(TwoFactor, Vec<usize>)> = None;
    while let Some(tf) = en.try_next().expect("unbounded") {
        any = true;
        multiedge_cycles |= tf.has_two_cycle();
        if let Some(odd) = tf.components().iter().find(|c| c.len() % 2 == 1) {
            let odd = odd.clone();
            bad = Some((tf, odd));
            break;
        }
    }
    let mut report = match bad {
        Some((tf, odd)) => finish(
            "e2f",
            false,
            Some(Certificate::OddCycleTwoFactor {
                edges: tf.edges().to_vec(),
                odd_cycle: odd,
            }),
            en.nodes,
            t0,
        ),
        None => finish("e2f", true, None, en.nodes, t0),
    };
    report.stats.vacuous = !any;
    report.stats.multiedge_cycles = multiedge_cycles;
    report
}

/// t-malleability of a vertex `v` of degree `t >= 2`: for every perfect
/// matching `M` and every edge `e` incident to `v` outside `M`, some
/// Hamiltonian extension of `M` contains `e`. (Equivalently, t-1 extensions
/// of `M` jointly cover all edges at `v`.)
pub fn is_malleable_with(
    g: &Graph,
    v: usize,
    cfg: &EngineConfig,
) -> Result<PropertyReport, EngineError> {
    let t0 = Instant::now();
    if v >= g.n() {
        return Err(EngineError::BadVertex(v));
    }
    if g.deg(v) < 2 {
        return Err(EngineError::DegreeTooSmall(v, g.deg(v)));
    }
    let mut nodes = 0u64;
    if g.n() > 2 && g.has_parallel_at(v) {
        // a Hamiltonian cycle on more than two vertices cannot use two
        // parallel edges, so coverage of the parallel pair is impossible
        let mut pms = PmEnumerator::new(g, &[], cfg)?;
        if pms.try_next()?.is_none() {
            return Err(EngineError::NoPerfectMatching);
        }
        return Ok(finish(
            &format!("malleable({})", v),
            false,
            Some(Certificate::MultiedgeAtVertex { vertex: v }),
            pms.nodes,
            t0,
        ));
    }
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    let mut failure: Option<(Matching, usize)> = None;
    'outer: while let Some(m) = pms.try_next()? {
        any = true;
        let (ext, stats) = extensions_of_with(g, &m, cfg)?;
        nodes += stats.nodes;
        for &e in g.incident_edges(v) {
            if m.contains(e) {
                continue;
            }
            if !ext.iter().any(|x| x.partner.contains(e)) {
                failure = Some((m, e));
                break 'outer;
            }
        }
    }
    nodes += pms.nodes;
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    Ok(match failure {
        Some((m, e)) => finish(
            &format!("malleable({})", v),
            false,
            Some(Certificate::MalleabilityFailure {
                vertex: v,
                matching: m.edges().to_vec(),
                edge: e,
            }),
            nodes,
            t0,
        ),
        None => finish(&format!("malleable({})", v), true, None, nodes, t0),
    })
}

pub fn is_malleable(g: &Graph, v: usize) -> Result<PropertyReport, EngineError> {
    is_malleable_with(g, v, &EngineConfig::default())
}

/// All malleable vertices, computed in one pass over the perfect matchings.
pub fn malleable_vertices_with(g: &Graph, cfg: &EngineConfig) -> Result<Vec<usize>, EngineError> {
    let mut alive: Vec<bool> = (0..g.n())
        .map(|v| g.deg(v) >= 2 && !(g.n() > 2 && g.has_parallel_at(v)))
        .collect();
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    while let Some(m) = pms.try_next()? {
        any = true;
        if alive.iter().all(|a| !a) {
            break;
        }
        let (ext, _) = extensions_of_with(g, &m, cfg)?;
        let mut covered = vec![false; g.m()];
        for x in &ext {
            for &e in x.partner.edges() {
                covered[e] = true;
            }
        }
        for (v, flag) in alive.iter_mut().enumerate() {
            if *flag
                && g.incident_edges(v)
                    .iter()
                    .any(|&e| !m.contains(e) && !covered[e])
            {
                *flag = false;
            }
        }
    }
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    Ok((0..g.n()).filter(|&v| alive[v]).collect())
}

pub fn malleable_vertices(g: &Graph) -> Result<Vec<usize>, EngineError> {
    malleable_vertices_with(g, &EngineConfig::default())
}

/// Tight cut: every perfect matching intersects the cut in exactly one edge.
pub fn is_tight_cut_with(
    g: &Graph,
    cut: &EdgeCut,
    cfg: &EngineConfig,
) -> Result<bool, EngineError> {
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    while let Some(m) = pms.try_next()? {
        any = true;
        let hits = cut.edges().iter().filter(|&&e| m.contains(e)).count();
        if hits != 1 {
            return Ok(false);
        }
    }
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    Ok(true)
}

pub fn is_tight_cut(g: &Graph, cut: &EdgeCut) -> Result<bool, EngineError> {
    is_tight_cut_with(g, cut, &EngineConfig::default())
}

/// True iff every perfect matching has a Hamiltonian extension whose cycle
/// contains `e` (which may lie in the matching or in the partner).
pub fn extends_through_edge_with(
    g: &Graph,
    e: usize,
    cfg: &EngineConfig,
) -> Result<PropertyReport, EngineError> {
    let t0 = Instant::now();
    if e >= g.m() {
        return Err(EngineError::BadEdge(e));
    }
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let mut nodes = 0u64;
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    let mut failure: Option<Matching> = None;
    while let Some(m) = pms.try_next()? {
        any = true;
        let ok = if m.contains(e) {
            first_extension(g, &m, cfg, &mut nodes)?.is_some()
        } else {
            let (ext, stats) = extensions_of_with(g, &m, cfg)?;
            nodes += stats.nodes;
            ext.iter().any(|x| x.partner.contains(e))
        };
        if !ok {
            failure = Some(m);
            break;
        }
    }
    nodes += pms.nodes;
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    Ok(match failure {
        Some(m) => finish(
            &format!("extends-through({})", e),
            false,
            Some(Certificate::NoExtensionThroughEdge {
                edge: e,
                matching: m.edges().to_vec(),
            }),
            nodes,
            t0,
        ),
        None => finish(&format!("extends-through({})", e), true, None, nodes, t0),
    })
}

pub fn extends_through_edge(g: &Graph, e: usize) -> Result<PropertyReport, EngineError> {
    extends_through_edge_with(g, e, &EngineConfig::default())
}

/// The two 2-factor conditions of the 2-cut composition theorem, computed by
/// one enumeration pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoFactorConditions {
    /// Every 2-factor is a Hamiltonian cycle containing the edge.
    pub all_ham_through: bool,
    /// Every 2-factor containing the edge is a Hamiltonian cycle.
    pub all_ham_containing: bool,
    /// No 2-factor exists at all (both conditions hold vacuously).
    pub vacuous: bool,
}

pub fn two_factor_conditions(g: &Graph, e: usize) -> TwoFactorConditions {
    let mut en = TfEnumerator::new(g, &EngineConfig { node_cap: u64::MAX });
    let mut any = false;
    let mut all_ham_through = true;
    let mut all_ham_containing = true;
    while let Some(tf) = en.try_next().expect("unbounded") {
        any = true;
        let through = tf.contains(e);
        if !(tf.is_hamiltonian() && through) {
            all_ham_through = false;
        }
        if through && !tf.is_hamiltonian() {
            all_ham_containing = false;
        }
        if !all_ham_through && !all_ham_containing {
            break;
        }
    }
    TwoFactorConditions {
        all_ham_through,
        all_ham_containing,
        vacuous: !any,
    }
}

/// First perfect matching (in enumeration order) with exactly one
/// Hamiltonian extension, if any.
pub fn find_unique_extension_pm_with(
    g: &Graph,
    cfg: &EngineConfig,
) -> Result<Option<(Matching, Extension)>, EngineError> {
    let mut pms = PmEnumerator::new(g, &[], cfg)?;
    let mut any = false;
    while let Some(m) = pms.try_next()? {
        any = true;
        let (ext, _) = extensions_of_with(g, &m, cfg)?;
        if ext.len() == 1 {
            let x = ext.into_iter().next().unwrap();
            return Ok(Some((m, x)));
        }
    }
    if !any {
        return Err(EngineError::NoPerfectMatching);
    }
    Ok(None)
}

pub fn find_unique_extension_pm(g: &Graph) -> Result<Option<(Matching, Extension)>, EngineError> {
    find_unique_extension_pm_with(g, &EngineConfig::default())
}
