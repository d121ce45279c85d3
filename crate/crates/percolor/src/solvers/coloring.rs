//! Exact graph coloring by branch and bound in DSATUR order.
//!
//! The decision search branches on the uncolored vertex of maximum
//! saturation (ties: higher degree, then lower index), tries the colors
//! already in use plus at most one fresh color per branch point (breaking
//! color-class symmetry), and is seeded with a greedy clique lower bound.

use crate::graph::{Graph, Partition};
use crate::solvers::SolveResult;

/// Proper colorings are per-vertex labels `0..d`; `u32::MAX` marks uncolored
/// slots during the search.
const UNCOLORED: u32 = u32::MAX;

/// Decides whether the adjacency (one u64 row per vertex) is properly
/// `d`-colorable; on success returns one witness coloring.
pub(crate) fn decide_colorable_adjacency(adj: &[u64], d: u32, nodes: &mut u64) -> Option<Vec<u32>> {
    let n = adj.len();
    if n == 0 {
        return Some(vec![]);
    }
    if d == 0 {
        return None;
    }
    if d as usize >= n {
        return Some((0..n as u32).collect());
    }

    let mut colors = vec![UNCOLORED; n];
    // Degree-zero vertices never constrain anything; color them up front.
    let mut remaining = 0usize;
    for v in 0..n {
        if adj[v] == 0 {
            colors[v] = 0;
        } else {
            remaining += 1;
        }
    }
    if remaining == 0 {
        return Some(colors);
    }
    // d < n <= 64, so a u64 per vertex tracks neighbor colors.
    let mut sat = vec![0u64; n];
    let used = if remaining < n { 1 } else { 0 }; // color 0 taken by isolated vertices
    if rec(adj, d, &mut colors, &mut sat, remaining, used, nodes) {
        Some(colors)
    } else {
        None
    }
}

fn rec(
    adj: &[u64],
    d: u32,
    colors: &mut [u32],
    sat: &mut [u64],
    remaining: usize,
    used: u32,
    nodes: &mut u64,
) -> bool {
    if remaining == 0 {
        return true;
    }
    *nodes += 1;

    // DSATUR selection among uncolored non-isolated vertices.
    let mut best_v = usize::MAX;
    let mut best_key = (0u32, 0u32);
    for v in 0..colors.len() {
        if colors[v] == UNCOLORED && adj[v] != 0 {
            let key = (sat[v].count_ones(), adj[v].count_ones());
            if best_v == usize::MAX || key > best_key {
                best_v = v;
                best_key = key;
            }
        }
    }
    let v = best_v;

    let limit = (used + 1).min(d);
    for c in 0..limit {
        if sat[v] >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        let mut touched = 0u64;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == UNCOLORED && sat[u] >> c & 1 == 0 {
                sat[u] |= 1 << c;
                touched |= 1 << u;
            }
        }
        let used_next = used.max(c + 1);
        if rec(adj, d, colors, sat, remaining - 1, used_next, nodes) {
            return true;
        }
        while touched != 0 {
            let u = touched.trailing_zeros() as usize;
            touched &= touched - 1;
            sat[u] &= !(1u64 << c);
        }
        colors[v] = UNCOLORED;
    }
    false
}

/// Greedy clique built by repeatedly taking the highest-degree vertex in the
/// running common neighborhood (ties: lowest index). A lower bound for chi.
fn greedy_clique_size(adj: &[u64]) -> u32 {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let pick = |cand: u64| -> Option<usize> {
        let mut best = None;
        let mut best_deg = 0;
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let deg = adj[v].count_ones();
            if best.is_none() || deg > best_deg {
                best = Some(v);
                best_deg = deg;
            }
        }
        best
    };
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut size = 0u32;
    let mut cand = full;
    while let Some(v) = pick(cand) {
        size += 1;
        cand &= adj[v];
    }
    size
}

/// Greedy DSATUR coloring; an upper bound for chi plus a witness.
fn dsatur_greedy(adj: &[u64]) -> (u32, Vec<u32>) {
    let n = adj.len();
    let mut colors = vec![UNCOLORED; n];
    let mut sat = vec![0u64; n];
    let mut max_color = 0u32;
    for _ in 0..n {
        let mut best_v = usize::MAX;
        let mut best_key = (0u32, 0u32);
        for v in 0..n {
            if colors[v] == UNCOLORED {
                let key = (sat[v].count_ones(), adj[v].count_ones());
                if best_v == usize::MAX || key > best_key {
                    best_v = v;
                    best_key = key;
                }
            }
        }
        let v = best_v;
        let c = (0..).find(|&c| sat[v] >> c & 1 == 0).unwrap();
        colors[v] = c;
        max_color = max_color.max(c);
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == UNCOLORED && c < 64 {
                sat[u] |= 1 << c;
            }
        }
    }
    (if n == 0 { 0 } else { max_color + 1 }, colors)
}

/// Exact chromatic number of a raw adjacency, without witness plumbing.
/// Shared with the percolation enumerations, which solve millions of tiny
/// instances.
pub(crate) fn chi_adjacency(adj: &[u64], nodes: &mut u64) -> u32 {
    chi_adjacency_with_witness(adj, nodes).0
}

fn chi_adjacency_with_witness(adj: &[u64], nodes: &mut u64) -> (u32, Vec<u32>) {
    let n = adj.len();
    if n == 0 {
        return (0, vec![]);
    }
    if adj.iter().all(|&row| row == 0) {
        return (1, vec![0; n]);
    }
    let lb = greedy_clique_size(adj).max(2);
    let (ub, greedy) = dsatur_greedy(adj);
    if lb >= ub {
        return (ub, greedy);
    }
    for d in lb..ub {
        if let Some(colors) = decide_colorable_adjacency(adj, d, nodes) {
            return (d, colors);
        }
    }
    (ub, greedy)
}

/// Whether `g` has a proper coloring with at most `d` colors; returns the
/// witness partition into color classes when it does.
pub fn is_d_colorable(g: &Graph, d: u32) -> Option<Partition> {
    let mut nodes = 0u64;
    decide_colorable_adjacency(g.adjacency(), d, &mut nodes).map(|c| Partition::from_assignment(&c))
}

/// Exact chromatic number with a proper coloring witness.
pub fn chromatic_number(g: &Graph) -> SolveResult<Partition> {
    let mut nodes = 0u64;
    let (chi, colors) = chi_adjacency_with_witness(g.adjacency(), &mut nodes);
    SolveResult {
        value: chi as u64,
        witness: Partition::from_assignment(&colors),
        nodes_explored: nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, Graph};
    use crate::solvers::check::is_proper_coloring;

    #[test]
    fn odd_and_even_cycles() {
        let c5 = cycle(5).unwrap();
        assert!(is_d_colorable(&c5, 2).is_none());
        let w = is_d_colorable(&c5, 3).unwrap();
        assert!(is_proper_coloring(&c5, &w));
        assert_eq!(chromatic_number(&c5).value, 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()).value, 2);
    }

    #[test]
    fn cliques() {
        for k in 1..=8 {
            let g = complete(k).unwrap();
            let r = chromatic_number(&g);
            assert_eq!(r.value, k as u64);
            assert!(is_proper_coloring(&g, &r.witness));
            assert_eq!(r.witness.num_blocks(), k);
        }
    }

    #[test]
    fn edgeless_and_empty() {
        let e = Graph::new(4, vec![]).unwrap();
        assert_eq!(chromatic_number(&e).value, 1);
        let z = Graph::new(0, vec![]).unwrap();
        assert_eq!(chromatic_number(&z).value, 0);
        assert_eq!(z.num_edges(), 0);
        assert!(is_d_colorable(&e, 1).is_some());
    }

    #[test]
    fn multipartite_chromatic_number_is_part_count() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let r = chromatic_number(&g);
        assert_eq!(r.value, 3);
        assert!(is_proper_coloring(&g, &r.witness));
    }

    #[test]
    fn witness_always_revalidates() {
        for seed in 0..20 {
            let g = crate::graph::gnp(11, 0.4, seed).unwrap();
            let r = chromatic_number(&g);
            assert!(is_proper_coloring(&g, &r.witness), "seed {seed}");
            assert_eq!(r.witness.num_blocks() as u64, r.value.max(1).min(g.n() as u64));
            if r.value > 1 {
                assert!(is_d_colorable(&g, r.value as u32 - 1).is_none(), "seed {seed}");
            }
        }
    }
}
