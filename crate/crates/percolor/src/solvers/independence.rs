//! Exact maximum independent set by branch and bound on vertex bitsets.

use crate::graph::{Graph, VertexSet};
use crate::solvers::SolveResult;

/// Exact independence number with a witness set spanning no edges.
pub fn independence_number(g: &Graph) -> SolveResult<VertexSet> {
    let n = g.n();
    let full = if n == 0 {
        0
    } else if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    };
    let mut best = (0u32, 0u64);
    let mut nodes = 0u64;
    rec(g.adjacency(), full, 0, 0, &mut best, &mut nodes);
    SolveResult {
        value: best.0 as u64,
        witness: VertexSet::from_bits(best.1),
        nodes_explored: nodes,
    }
}

fn rec(adj: &[u64], cand: u64, cur: u64, cur_size: u32, best: &mut (u32, u64), nodes: &mut u64) {
    *nodes += 1;
    if cur_size + cand.count_ones() <= best.0 {
        return;
    }
    if cand == 0 {
        // strict improvement keeps the first witness found, deterministically
        if cur_size > best.0 {
            *best = (cur_size, cur);
        }
        return;
    }
    // Branch on the candidate of maximum degree within the candidate set:
    // including it prunes the most.
    let mut v = 0;
    let mut v_deg = u32::MAX;
    let mut c = cand;
    while c != 0 {
        let u = c.trailing_zeros() as usize;
        c &= c - 1;
        let deg = (adj[u] & cand).count_ones();
        if v_deg == u32::MAX || deg > v_deg {
            v = u;
            v_deg = deg;
        }
    }
    let bit = 1u64 << v;
    rec(adj, cand & !adj[v] & !bit, cur | bit, cur_size + 1, best, nodes);
    rec(adj, cand & !bit, cur, cur_size, best, nodes);
}
