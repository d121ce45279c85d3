//! Minimum number of monochromatic edges over all colorings with a bounded
//! number of color classes.
//!
//! Branch and bound over restricted-growth assignments (vertices in index
//! order, each taking an existing block or the one next fresh block), with
//! the running monochromatic count as the only pruning bound. Among optimal
//! partitions the lexicographically smallest assignment vector wins, which
//! the lex-ordered DFS with strict improvement delivers for free.

use crate::graph::{Graph, Partition};
use crate::solvers::SolveResult;

/// Minimum over all partitions of the vertices into at most `c` blocks of
/// the number of edges with both endpoints in one block. Zero exactly when
/// the graph is `c`-colorable.
pub fn min_monochromatic_edges(g: &Graph, c: u32) -> SolveResult<Partition> {
    assert!(c >= 1, "color budget must be at least 1");
    let n = g.n();
    if n == 0 {
        return SolveResult {
            value: 0,
            witness: Partition::one_block(0),
            nodes_explored: 0,
        };
    }
    // More blocks than vertices never helps.
    let c = (c as usize).min(n) as u32;

    let mut state = Search {
        adj: g.adjacency(),
        c,
        assign: vec![0u32; n],
        blocks: [0u64; 64],
        best_cost: u64::MAX,
        best_assign: vec![0u32; n],
        nodes: 0,
    };
    state.rec(0, 0, 0);

    SolveResult {
        value: state.best_cost,
        witness: Partition::from_assignment(&state.best_assign),
        nodes_explored: state.nodes,
    }
}

struct Search<'a> {
    adj: &'a [u64],
    c: u32,
    assign: Vec<u32>,
    blocks: [u64; 64],
    best_cost: u64,
    best_assign: Vec<u32>,
    nodes: u64,
}

impl Search<'_> {
    fn rec(&mut self, v: usize, used: u32, cost: u64) {
        if cost >= self.best_cost {
            return;
        }
        if v == self.assign.len() {
            // cost < best_cost here, so this is a strict improvement and the
            // first (lex-smallest) attainer of the new optimum.
            self.best_cost = cost;
            self.best_assign.copy_from_slice(&self.assign);
            return;
        }
        self.nodes += 1;
        let fresh_limit = (used + 1).min(self.c);
        for b in 0..fresh_limit {
            let delta = (self.adj[v] & self.blocks[b as usize]).count_ones() as u64;
            self.assign[v] = b;
            self.blocks[b as usize] |= 1 << v;
            self.rec(v + 1, used.max(b + 1), cost + delta);
            self.blocks[b as usize] &= !(1u64 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, VertexSet};
    use crate::solvers::check::monochromatic_edge_count;
    use crate::solvers::{chromatic_number, is_d_colorable};

    #[test]
    fn k5_two_blocks_needs_four() {
        let r = min_monochromatic_edges(&complete(5).unwrap(), 2);
        assert_eq!(r.value, 4);
        // lex-smallest optimal assignment: {0,1,2} | {3,4}
        assert_eq!(r.witness.assignment(), vec![0, 0, 0, 1, 1]);
        assert_eq!(
            r.witness.blocks(),
            &[VertexSet::from_bits(0b00111), VertexSet::from_bits(0b11000)]
        );
    }

    #[test]
    fn odd_cycle_two_blocks_needs_one() {
        let c5 = cycle(5).unwrap();
        let r = min_monochromatic_edges(&c5, 2);
        assert_eq!(r.value, 1);
        assert_eq!(monochromatic_edge_count(&c5, &r.witness), 1);
    }

    #[test]
    fn zero_iff_colorable() {
        for seed in 0..15 {
            let g = crate::graph::gnp(9, 0.5, seed).unwrap();
            for c in 1..=5u32 {
                let r = min_monochromatic_edges(&g, c);
                assert_eq!(monochromatic_edge_count(&g, &r.witness), r.value, "witness off");
                assert!(r.witness.num_blocks() <= c as usize);
                assert_eq!(r.value == 0, is_d_colorable(&g, c).is_some(), "seed {seed}, c {c}");
            }
        }
    }

    #[test]
    fn proper_budget_gives_zero() {
        let g = complete(6).unwrap();
        let chi = chromatic_number(&g).value as u32;
        assert_eq!(min_monochromatic_edges(&g, chi).value, 0);
        assert_eq!(min_monochromatic_edges(&g, chi + 3).value, 0);
    }

    #[test]
    fn single_block_counts_all_edges() {
        let g = complete(4).unwrap();
        let r = min_monochromatic_edges(&g, 1);
        assert_eq!(r.value, g.num_edges() as u64);
        assert_eq!(r.witness.num_blocks(), 1);
    }
}
