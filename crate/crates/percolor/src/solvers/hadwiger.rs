//! Exact Hadwiger number (largest clique minor) for tiny graphs.
//!
//! Search space: every way of contracting edges corresponds to a partition
//! of the vertices into connected branch sets; the Hadwiger number is the
//! maximum clique size over all quotient graphs. Deleting edges never helps
//! a clique minor, so the recursion contracts one quotient edge at a time,
//! memoizes on the canonical branch-set partition, and prunes a state once
//! its block count can no longer beat the incumbent.

use crate::graph::{Graph, VertexSet};
use crate::solvers::{SolveResult, SolverError};
use std::collections::HashSet;

pub const DEFAULT_HADWIGER_CAP: usize = 10;

/// A clique minor model: pairwise-adjacent connected branch sets.
pub type MinorModel = Vec<VertexSet>;

pub fn hadwiger_number(g: &Graph) -> Result<SolveResult<MinorModel>, SolverError> {
    hadwiger_number_with_cap(g, DEFAULT_HADWIGER_CAP)
}

pub fn hadwiger_number_with_cap(g: &Graph, cap: usize) -> Result<SolveResult<MinorModel>, SolverError> {
    let n = g.n();
    if n > cap {
        return Err(SolverError::VertexCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(SolveResult { value: 0, witness: vec![], nodes_explored: 0 });
    }

    let mut search = Search {
        adj: g.adjacency(),
        best: 0,
        best_model: vec![],
        seen: HashSet::new(),
        nodes: 0,
    };
    let start: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    search.explore(start);

    Ok(SolveResult {
        value: search.best as u64,
        witness: search.best_model.into_iter().map(VertexSet::from_bits).collect(),
        nodes_explored: search.nodes,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    best: u32,
    best_model: Vec<u64>,
    seen: HashSet<Vec<u64>>,
    nodes: u64,
}

impl Search<'_> {
    fn explore(&mut self, blocks: Vec<u64>) {
        self.nodes += 1;
        let b = blocks.len();

        // Quotient adjacency over blocks, as bitmasks over block indices.
        let reach: Vec<u64> = blocks
            .iter()
            .map(|&set| {
                let mut r = 0u64;
                let mut s = set;
                while s != 0 {
                    let v = s.trailing_zeros() as usize;
                    s &= s - 1;
                    r |= self.adj[v];
                }
                r
            })
            .collect();
        let mut qadj = vec![0u64; b];
        for i in 0..b {
            for j in i + 1..b {
                if reach[i] & blocks[j] != 0 {
                    qadj[i] |= 1 << j;
                    qadj[j] |= 1 << i;
                }
            }
        }

        // Maximum clique in the quotient, exhaustively (b <= cap <= 64 but
        // in practice <= 10).
        for mask in 1u64..(1 << b) {
            if mask.count_ones() <= self.best {
                continue;
            }
            let mut ok = true;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                if qadj[i] & mask != mask & !(1 << i) {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.best = mask.count_ones();
                self.best_model = VertexSet::from_bits(mask).iter().map(|i| blocks[i]).collect();
            }
        }

        // Any descendant has at most b-1 blocks, so at most a (b-1)-clique.
        if self.best as usize >= b - 1 {
            return;
        }

        for i in 0..b {
            let mut js = qadj[i] & !((1u64 << (i + 1)) - 1); // j > i
            while js != 0 {
                let j = js.trailing_zeros() as usize;
                js &= js - 1;
                let mut merged: Vec<u64> = Vec::with_capacity(b - 1);
                for (t, &set) in blocks.iter().enumerate() {
                    if t == i {
                        merged.push(blocks[i] | blocks[j]);
                    } else if t != j {
                        merged.push(set);
                    }
                }
                merged.sort_unstable_by_key(|s| s.trailing_zeros());
                if self.seen.insert(merged.clone()) {
                    self.explore(merged);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, Graph};
    use crate::solvers::check::is_minor_model;

    #[test]
    fn cliques_are_their_own_best_minor() {
        for k in 1..=6 {
            let g = complete(k).unwrap();
            let r = hadwiger_number(&g).unwrap();
            assert_eq!(r.value, k as u64);
            assert!(is_minor_model(&g, &r.witness));
        }
    }

    #[test]
    fn cycles_contract_to_triangles() {
        for n in 3..=7 {
            let g = cycle(n).unwrap();
            let r = hadwiger_number(&g).unwrap();
            assert_eq!(r.value, 3, "C{n}");
            assert!(is_minor_model(&g, &r.witness));
        }
    }

    #[test]
    fn octahedron_has_a_k4_minor_only() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        let r = hadwiger_number(&g).unwrap();
        assert_eq!(r.value, 4); // planar, so no K5 minor
        assert!(is_minor_model(&g, &r.witness));
    }

    #[test]
    fn edgeless_and_cap() {
        let e = Graph::new(3, vec![]).unwrap();
        assert_eq!(hadwiger_number(&e).unwrap().value, 1);
        let big = crate::graph::gnp(11, 0.5, 1).unwrap();
        assert_eq!(
            hadwiger_number(&big).unwrap_err(),
            SolverError::VertexCapExceeded { n: 11, cap: 10 }
        );
        assert!(hadwiger_number_with_cap(&big, 11).is_ok());
    }

    #[test]
    fn witness_realizes_the_value() {
        for seed in 0..10 {
            let g = crate::graph::gnp(8, 0.5, seed).unwrap();
            let r = hadwiger_number(&g).unwrap();
            assert_eq!(r.witness.len() as u64, r.value.max(0), "seed {seed}");
            assert!(is_minor_model(&g, &r.witness), "seed {seed}");
        }
    }
}
