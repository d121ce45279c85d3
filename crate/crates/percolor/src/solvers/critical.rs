//! Extraction of an edge-critical subgraph witnessing the chromatic number.

use crate::graph::Graph;
use crate::solvers::{is_d_colorable, SolverError};

/// Shrinks `g` (which must have chromatic number `k`) to a `k`-critical
/// subgraph: chi stays `k` but removing any single edge drops it.
///
/// Edges are scanned in canonical order and deleted greedily whenever the
/// remainder is still not `(k-1)`-colorable, until a full pass deletes
/// nothing; isolated vertices are then dropped and the rest relabeled
/// densely in order. The canonical scan makes the output deterministic.
pub fn critical_subgraph(g: &Graph, k: u32) -> Result<Graph, SolverError> {
    let chi = crate::solvers::chromatic_number(g).value;
    if chi != k as u64 {
        return Err(SolverError::ChromaticMismatch { expected: k as u64, found: chi });
    }
    if k <= 1 {
        // Edgeless input: the critical core is a single vertex (or nothing).
        return Ok(Graph::new(k as usize, vec![]).expect("tiny graph"));
    }

    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    loop {
        let mut deleted = false;
        let mut i = 0;
        while i < edges.len() {
            let mut trial = edges.clone();
            trial.remove(i);
            let h = Graph::new(n, trial).expect("edge subset of a valid graph");
            if is_d_colorable(&h, k - 1).is_none() {
                edges.remove(i);
                deleted = true;
            } else {
                i += 1;
            }
        }
        if !deleted {
            break;
        }
    }

    // Drop isolated vertices, relabeling the survivors in increasing order.
    let mut keep: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    keep.sort_unstable();
    keep.dedup();
    let mut relabel = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    let remapped = edges.iter().map(|&(u, v)| (relabel[u], relabel[v]));
    Ok(Graph::new(keep.len(), remapped).expect("relabeled graph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use crate::solvers::chromatic_number;

    fn c5_plus_pendant() -> Graph {
        Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)]).unwrap()
    }

    #[test]
    fn k5_is_its_own_critical_core() {
        let k5 = complete(5).unwrap();
        assert_eq!(critical_subgraph(&k5, 5).unwrap(), k5);
    }

    #[test]
    fn isolated_vertex_is_dropped() {
        let g = Graph::new(6, complete(5).unwrap().edges().iter().map(|&(u, v)| (u as usize, v as usize)))
            .unwrap();
        assert_eq!(critical_subgraph(&g, 5).unwrap(), complete(5).unwrap());
    }

    #[test]
    fn pendant_path_is_shaved_off_odd_cycle() {
        let g = c5_plus_pendant();
        let core = critical_subgraph(&g, 3).unwrap();
        assert_eq!(core, cycle(5).unwrap());
        assert!(core.vertices().all(|v| core.degree(v) >= 2));
    }

    #[test]
    fn wrong_k_is_rejected() {
        let g = cycle(5).unwrap();
        assert_eq!(
            critical_subgraph(&g, 2).unwrap_err(),
            SolverError::ChromaticMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn even_cycle_shrinks_to_an_edge() {
        let g = cycle(6).unwrap();
        let core = critical_subgraph(&g, 2).unwrap();
        assert_eq!((core.n(), core.num_edges()), (2, 1));
        assert_eq!(chromatic_number(&core).value, 2);
    }
}
