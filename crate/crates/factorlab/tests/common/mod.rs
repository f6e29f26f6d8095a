//! Independent oracles for the integration tests: plain subset-filter
//! enumeration, a Ryser permanent, and a seeded random multigraph source.
//! None of this shares code with the library's search engines.
#![allow(dead_code)] // each test binary uses its own subset

use factorlab::graph::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every perfect matching as a sorted edge-id set, by filtering all
/// combinations of n/2 edges.
pub fn naive_perfect_matchings(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let m = g.m();
    if n % 2 == 1 {
        return Vec::new();
    }
    let k = n / 2;
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > m {
        return Vec::new();
    }
    'combos: loop {
        let mut cover = vec![0u8; n];
        let mut ok = true;
        for &e in &combo {
            let (u, v) = g.endpoints(e);
            cover[u] += 1;
            cover[v] += 1;
            if cover[u] > 1 || cover[v] > 1 {
                ok = false;
                break;
            }
        }
        if ok && cover.iter().all(|&c| c == 1) {
            out.push(combo.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if combo[i] < m - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                continue 'combos;
            }
        }
        break;
    }
    out
}

/// Every 2-factor as a sorted edge-id set, by filtering all 2^m subsets.
pub fn naive_two_factors(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.m();
    assert!(m <= 22, "naive two-factor oracle is exponential in m");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let mut deg = vec![0u8; g.n()];
        let mut ok = true;
        for e in 0..m {
            if mask >> e & 1 == 1 {
                let (u, v) = g.endpoints(e);
                deg[u] += 1;
                deg[v] += 1;
                if deg[u] > 2 || deg[v] > 2 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && deg.iter().all(|&d| d == 2) {
            out.push((0..m).filter(|&e| mask >> e & 1 == 1).collect());
        }
    }
    out
}

/// Extensions of a perfect matching via the naive matching oracle: disjoint
/// matchings whose union with it is one spanning cycle.
pub fn naive_extensions(g: &Graph, m: &[usize]) -> Vec<Vec<usize>> {
    naive_perfect_matchings(g)
        .into_iter()
        .filter(|n| {
            if n.iter().any(|e| m.contains(e)) {
                return false;
            }
            let mut union = m.to_vec();
            union.extend_from_slice(n);
            naive_is_single_cycle(g, &union)
        })
        .collect()
}

pub fn naive_is_single_cycle(g: &Graph, edges: &[usize]) -> bool {
    let mut deg = vec![0u8; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 2) {
        return false;
    }
    // walk the union; a single cycle must visit every vertex
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut cnt = 1;
    while let Some(v) = stack.pop() {
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
                cnt += 1;
                stack.push(w);
            }
        }
    }
    cnt == g.n()
}

/// Ryser's permanent of the biadjacency matrix of a balanced bipartite
/// multigraph; counts its perfect matchings with parallel edges distinct.
pub fn biadjacency_permanent(g: &Graph) -> Option<u128> {
    let bip = g.is_bipartite()?;
    let (a, b) = bip.sides();
    if a.len() != b.len() {
        return None;
    }
    let k = a.len();
    assert!(k <= 16);
    let col_of = |v: usize| b.iter().position(|&x| x == v).unwrap();
    let mut mat = vec![vec![0i128; k]; k];
    for e in g.edges() {
        let (u, v) = (e.u, e.v);
        let (row, col) = if a.contains(&u) { (u, v) } else { (v, u) };
        let ri = a.iter().position(|&x| x == row).unwrap();
        mat[ri][col_of(col)] += 1;
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1u32 << k) {
        let mut prod: i128 = 1;
        for row in mat.iter().take(k) {
            let mut s: i128 = 0;
            for (j, &x) in row.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    s += x;
                }
            }
            prod *= s;
            if prod == 0 {
                break;
            }
        }
        let sign = if (k as u32 - mask.count_ones()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += sign * prod;
    }
    Some(total as u128)
}

/// Seeded random loopless multigraph; may be disconnected.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(0..=max_m);
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        while v == u {
            v = rng.gen_range(0..n);
        }
        pairs.push((u, v));
    }
    Graph::new(n, pairs).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
