//! Independent witness checkers.
//!
//! Each checker evaluates its definition directly from the edge list, with
//! none of the search machinery, so solver witnesses can be re-validated
//! against something that cannot share a bug with the search.

use crate::graph::{Graph, Partition, VertexSet};

/// True when no edge has both endpoints in the same block.
pub fn is_proper_coloring(g: &Graph, p: &Partition) -> bool {
    p.n() == g.n() && monochromatic_edge_count(g, p) == 0
}

/// Number of edges whose endpoints share a block.
pub fn monochromatic_edge_count(g: &Graph, p: &Partition) -> u64 {
    assert_eq!(p.n(), g.n(), "partition of a different vertex set");
    g.edges()
        .iter()
        .filter(|&&(u, v)| p.block_of(u as usize) == p.block_of(v as usize))
        .count() as u64
}

/// True when `s` spans no edge of `g`.
pub fn is_independent_set(g: &Graph, s: VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| !(s.contains(u as usize) && s.contains(v as usize)))
}

/// True when the branch sets form a clique minor model: nonempty, pairwise
/// disjoint, each inducing a connected subgraph, and pairwise joined by at
/// least one edge.
pub fn is_minor_model(g: &Graph, branch_sets: &[VertexSet]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &b in branch_sets {
        if b.is_empty() || !b.is_disjoint(seen) || !b.is_subset_of(g.vertex_set()) {
            return false;
        }
        if !is_connected_within(g, b) {
            return false;
        }
        seen = seen.union(b);
    }
    for i in 0..branch_sets.len() {
        for j in i + 1..branch_sets.len() {
            let joined = branch_sets[i]
                .iter()
                .any(|u| g.neighbors(u) & branch_sets[j].bits() != 0);
            if !joined {
                return false;
            }
        }
    }
    true
}

fn is_connected_within(g: &Graph, b: VertexSet) -> bool {
    let start = match b.min_element() {
        Some(v) => v,
        None => return false,
    };
    let mut reached = 1u64 << start;
    loop {
        let mut next = reached;
        let mut r = reached;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            next |= g.neighbors(v) & b.bits();
        }
        if next == reached {
            break;
        }
        reached = next;
    }
    reached == b.bits()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn coloring_checks() {
        let c5 = cycle(5).unwrap();
        let proper = Partition::from_assignment(&[0, 1, 0, 1, 2]);
        assert!(is_proper_coloring(&c5, &proper));
        let improper = Partition::from_assignment(&[0, 1, 0, 1, 0]);
        assert!(!is_proper_coloring(&c5, &improper));
        assert_eq!(monochromatic_edge_count(&c5, &improper), 1);
        assert_eq!(monochromatic_edge_count(&c5, &Partition::one_block(5)), 5);
    }

    #[test]
    fn independence_checks() {
        let c5 = cycle(5).unwrap();
        assert!(is_independent_set(&c5, [0usize, 2].into_iter().collect()));
        assert!(!is_independent_set(&c5, [0usize, 1].into_iter().collect()));
        assert!(is_independent_set(&c5, VertexSet::EMPTY));
    }

    #[test]
    fn minor_model_checks() {
        let k4 = complete(4).unwrap();
        let singletons: Vec<VertexSet> = (0..4).map(VertexSet::singleton).collect();
        assert!(is_minor_model(&k4, &singletons));

        let c5 = cycle(5).unwrap();
        // contract {1,2} and {3,4} against {0}: a triangle minor
        let model = vec![
            VertexSet::singleton(0),
            [1usize, 2].into_iter().collect(),
            [3usize, 4].into_iter().collect(),
        ];
        assert!(is_minor_model(&c5, &model));
        // {0,2} is not connected in C5
        let broken = vec![[0usize, 2].into_iter().collect(), VertexSet::singleton(1)];
        assert!(!is_minor_model(&c5, &broken));
        // overlapping branch sets
        let overlap = vec![
            [0usize, 1].into_iter().collect::<VertexSet>(),
            [1usize, 2].into_iter().collect(),
        ];
        assert!(!is_minor_model(&c5, &overlap));
    }
}
