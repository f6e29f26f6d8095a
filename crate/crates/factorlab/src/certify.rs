//! Independent re-validation of certificates.
//!
//! The checkers here share no code with the enumeration engine: matchings
//! are re-enumerated by a plain recursion over uncovered vertices and
//! Hamiltonicity is re-checked by a direct walk, so a certificate accepted
//! here holds regardless of how the search that produced it behaved.

use crate::decide::{Certificate, PropertyReport};
use crate::graph::Graph;

/// Checks that the report's certificate proves what the verdict claims.
pub fn revalidate(g: &Graph, report: &PropertyReport) -> Result<(), String> {
    match &report.certificate {
        None => Ok(()),
        Some(cert) => revalidate_certificate(g, cert),
    }
}

pub fn revalidate_certificate(g: &Graph, cert: &Certificate) -> Result<(), String> {
    match cert {
        Certificate::FailingMatching { matching } => {
            check_perfect_matching(g, matching)?;
            if !extensions(g, matching).is_empty() {
                return Err("claimed failing matching has an extension".into());
            }
            Ok(())
        }
        Certificate::DisconnectedTwoFactor { edges, components } => {
            check_two_factor(g, edges)?;
            let comps = two_factor_components(g, edges);
            if comps.len() < 2 {
                return Err("claimed disconnected 2-factor is a single cycle".into());
            }
            let mut claimed: Vec<Vec<usize>> = components
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    c
                })
                .collect();
            claimed.sort();
            let mut actual = comps;
            actual.sort();
            if claimed != actual {
                return Err("claimed components do not match the edge set".into());
            }
            Ok(())
        }
        Certificate::OddCycleTwoFactor { edges, odd_cycle } => {
            check_two_factor(g, edges)?;
            if odd_cycle.len() % 2 == 0 {
                return Err("claimed odd cycle has even length".into());
            }
            // consecutive cycle vertices (cyclically) must be joined within the factor
            let k = odd_cycle.len();
            for i in 0..k {
                let (u, v) = (odd_cycle[i], odd_cycle[(i + 1) % k]);
                if !edges.iter().any(|&e| {
                    let (a, b) = g.endpoints(e);
                    (a, b) == (u, v) || (a, b) == (v, u)
                }) {
                    return Err(format!("cycle step {}-{} is not a factor edge", u, v));
                }
            }
            Ok(())
        }
        Certificate::MalleabilityFailure {
            vertex,
            matching,
            edge,
        } => {
            check_perfect_matching(g, matching)?;
            if !g.incident_edges(*vertex).contains(edge) {
                return Err("witness edge is not incident to the vertex".into());
            }
            if matching.contains(edge) {
                return Err("witness edge lies in the matching".into());
            }
            for n in extensions(g, matching) {
                if n.contains(edge) {
                    return Err("an extension covers the witness edge".into());
                }
            }
            Ok(())
        }
        Certificate::MultiedgeAtVertex { vertex } => {
            if g.n() <= 2 {
                return Err(
                    "multiedge refusal only applies to graphs on more than 2 vertices".into(),
                );
            }
            if !g.has_parallel_at(*vertex) {
                return Err("vertex has no parallel edges".into());
            }
            Ok(())
        }
        Certificate::UniqueExtension { matching, partner } => {
            check_perfect_matching(g, matching)?;
            check_perfect_matching(g, partner)?;
            if matching.iter().any(|e| partner.contains(e)) {
                return Err("matching and partner are not disjoint".into());
            }
            let mut union = matching.clone();
            union.extend_from_slice(partner);
            if !is_hamiltonian(g, &union) {
                return Err("matching plus partner is not a Hamiltonian cycle".into());
            }
            let all = extensions(g, matching);
            if all.len() != 1 {
                return Err(format!(
                    "matching has {} extensions, not exactly one",
                    all.len()
                ));
            }
            Ok(())
        }
        Certificate::ExtensionTable { rows } => {
            let all = matchings(g, &[]);
            if rows.len() != all.len() {
                return Err(format!(
                    "table has {} rows but the graph has {} perfect matchings",
                    rows.len(),
                    all.len()
                ));
            }
            for row in rows {
                check_perfect_matching(g, &row.matching)?;
                let cnt = extensions(g, &row.matching).len();
                if cnt != row.extensions {
                    return Err(format!(
                        "row {:?} claims {} extensions, found {}",
                        row.matching, row.extensions, cnt
                    ));
                }
            }
            Ok(())
        }
        Certificate::NoExtensionThroughEdge { edge, matching } => {
            check_perfect_matching(g, matching)?;
            if *edge >= g.m() {
                return Err("edge out of range".into());
            }
            if matching.contains(edge) {
                // the edge lies in every extension's cycle; the claim is
                // then that no extension exists at all
                if !extensions(g, matching).is_empty() {
                    return Err("matching containing the edge has an extension".into());
                }
            } else if extensions(g, matching).iter().any(|n| n.contains(edge)) {
                return Err("an extension passes through the edge".into());
            }
            Ok(())
        }
    }
}

fn check_perfect_matching(g: &Graph, edges: &[usize]) -> Result<(), String> {
    let mut cover = vec![0u32; g.n()];
    for &e in edges {
        if e >= g.m() {
            return Err(format!("edge {} out of range", e));
        }
        let (u, v) = g.endpoints(e);
        cover[u] += 1;
        cover[v] += 1;
    }
    match cover.iter().position(|&c| c != 1) {
        None => Ok(()),
        Some(v) => Err(format!("vertex {} covered {} times", v, cover[v])),
    }
}

fn check_two_factor(g: &Graph, edges: &[usize]) -> Result<(), String> {
    let mut deg = vec![0u32; g.n()];
    for &e in edges {
        if e >= g.m() {
            return Err(format!("edge {} out of range", e));
        }
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    match deg.iter().position(|&d| d != 2) {
        None => Ok(()),
        Some(v) => Err(format!(
            "vertex {} has degree {} in the subgraph",
            v, deg[v]
        )),
    }
}

/// Plain recursive enumeration of perfect matchings avoiding `forbidden`.
fn matchings(g: &Graph, forbidden: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut covered = vec![false; g.n()];
    let mut acc = Vec::new();
    rec(g, forbidden, &mut covered, &mut acc, &mut out);
    fn rec(
        g: &Graph,
        forbidden: &[usize],
        covered: &mut Vec<bool>,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                let mut m = acc.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
            Some(v) => v,
        };
        for &e in g.incident_edges(v) {
            if forbidden.contains(&e) {
                continue;
            }
            let w = g.other_end(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            acc.push(e);
            rec(g, forbidden, covered, acc, out);
            acc.pop();
            covered[v] = false;
            covered[w] = false;
        }
    }
    out
}

/// Extensions of a perfect matching: disjoint perfect matchings whose union
/// with it walks a single spanning cycle.
fn extensions(g: &Graph, m: &[usize]) -> Vec<Vec<usize>> {
    matchings(g, m)
        .into_iter()
        .filter(|n| {
            let mut union = m.to_vec();
            union.extend_from_slice(n);
            is_hamiltonian(g, &union)
        })
        .collect()
}

fn is_hamiltonian(g: &Graph, edges: &[usize]) -> bool {
    let mut deg = vec![0u32; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    two_factor_components(g, edges).len() == 1
}

/// Components of a 2-regular edge set as sorted vertex lists.
fn two_factor_components(g: &Graph, edges: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &e in edges {
                let (a, b) = g.endpoints(e);
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
