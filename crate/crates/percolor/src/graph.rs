//! Undirected simple graphs on up to 64 vertices, with a canonical edge order.
//!
//! Vertices are dense 0-based indices and adjacency is stored as one `u64`
//! bitset per vertex, so every algorithm downstream can run plain bitset
//! loops. Graphs are immutable after construction; [`EdgeSubset`] masks are
//! indexed by the canonical (lexicographic) edge order and carry the owning
//! graph's edge count so that masks from different graphs cannot be mixed up
//! silently.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

/// Hard cap on the vertex count; adjacency rows are single machine words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("graph supports at most {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge of this graph")]
    NoSuchEdge(usize, usize),
    #[error("vertex sets must be disjoint")]
    OverlappingSets,
    #[error("edge mask belongs to a graph with {mask_edges} edges, this graph has {graph_edges}")]
    ForeignMask { mask_edges: usize, graph_edges: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("complete graph needs at least one vertex")]
    EmptyClique,
    #[error("multipartite part sizes must be nonempty and positive")]
    BadPartSizes,
    #[error("edge probability must lie in [0, 1], got {0}")]
    BadProbability(f64),
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A subset of the vertices `0..n`, stored as a single bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Iterator over the set bits of a mask, ascending.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// A partition of the vertex set `0..n` into nonempty blocks.
///
/// Blocks are kept sorted by their smallest element, so two partitions with
/// the same blocks in a different order compare equal; block identity is by
/// content, never by label.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<VertexSet>) -> Result<Self, GraphError> {
        let full = low_bits(n);
        let mut seen = 0u64;
        for b in &blocks {
            if b.is_empty() {
                return Err(GraphError::InvalidPartition("empty block"));
            }
            if b.bits() & !full != 0 {
                return Err(GraphError::InvalidPartition("block contains vertex outside 0..n"));
            }
            if b.bits() & seen != 0 {
                return Err(GraphError::InvalidPartition("blocks overlap"));
            }
            seen |= b.bits();
        }
        if seen != full {
            return Err(GraphError::InvalidPartition("blocks do not cover the vertex set"));
        }
        blocks.sort_by_key(|b| b.min_element());
        Ok(Partition { n, blocks })
    }

    /// Builds a partition from a per-vertex block label; labels are arbitrary.
    pub fn from_assignment(labels: &[u32]) -> Self {
        let n = labels.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut blocks: Vec<(u32, VertexSet)> = Vec::new();
        for (v, &label) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(l, _)| *l == label) {
                Some((_, b)) => b.insert(v),
                None => blocks.push((label, VertexSet::singleton(v))),
            }
        }
        let blocks: Vec<VertexSet> = blocks.into_iter().map(|(_, b)| b).collect();
        Partition::new(n, blocks).expect("labels always form a valid partition")
    }

    /// All vertices in one block (identity under `uncut` of a 1-coloring).
    pub fn one_block(n: usize) -> Self {
        if n == 0 {
            Partition { n, blocks: vec![] }
        } else {
            Partition { n, blocks: vec![VertexSet::full(n)] }
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// Canonical per-vertex labels: block indices in order of first occurrence
    /// (a restricted-growth string, since blocks are sorted by minimum).
    pub fn assignment(&self) -> Vec<u32> {
        let mut labels = vec![0u32; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b.iter() {
                labels[v] = i as u32;
            }
        }
        labels
    }
}

// ---------------------------------------------------------------------------
// EdgeSubset
// ---------------------------------------------------------------------------

/// A subset of the edges of a specific graph, as a bit mask over the
/// canonical edge order. Carries the owning graph's edge count; graph
/// operations reject masks whose length does not match.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    num_edges: usize,
    bits: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(num_edges: usize) -> Self {
        EdgeSubset {
            num_edges,
            bits: vec![0; num_edges.div_ceil(64).max(1)],
        }
    }

    pub fn full(num_edges: usize) -> Self {
        let mut s = EdgeSubset::empty(num_edges);
        for w in &mut s.bits {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(num_edges: usize, indices: I) -> Self {
        let mut s = EdgeSubset::empty(num_edges);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn mask_tail(&mut self) {
        let last = self.bits.len() - 1;
        let used = self.num_edges - last * 64;
        self.bits[last] &= low_bits(used);
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.num_edges && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.num_edges, "edge index {i} out of range");
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.num_edges, "edge index {i} out of range");
        self.bits[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn check_owner(&self, other: &EdgeSubset) {
        assert_eq!(
            self.num_edges, other.num_edges,
            "edge masks belong to different graphs"
        );
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        self.check_owner(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        EdgeSubset { num_edges: self.num_edges, bits }
    }

    pub fn intersection(&self, other: &EdgeSubset) -> EdgeSubset {
        self.check_owner(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        EdgeSubset { num_edges: self.num_edges, bits }
    }

    pub fn difference(&self, other: &EdgeSubset) -> EdgeSubset {
        self.check_owner(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect();
        EdgeSubset { num_edges: self.num_edges, bits }
    }

    /// Bitwise complement within the owner's edge set.
    pub fn complement(&self) -> EdgeSubset {
        let mut s = EdgeSubset {
            num_edges: self.num_edges,
            bits: self.bits.iter().map(|w| !w).collect(),
        };
        s.mask_tail();
        s
    }

    pub fn is_subset_of(&self, other: &EdgeSubset) -> bool {
        self.check_owner(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    /// The mask as one word, when the owner has at most 64 edges.
    pub fn as_u64(&self) -> Option<u64> {
        if self.num_edges <= 64 {
            Some(self.bits[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubset[{}/{}:", self.count(), self.num_edges)?;
        for (i, e) in self.iter().enumerate() {
            write!(f, "{}{e}", if i > 0 { "," } else { " " })?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// An immutable undirected simple graph.
///
/// Edges are stored sorted lexicographically by `(min, max)`; this order is
/// the canonical edge order used by every [`EdgeSubset`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            if adj[a] >> b & 1 == 1 {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            list.push((a as u32, b as u32));
        }
        list.sort_unstable();
        Ok(Graph { n, adj, edges: list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical lexicographic order; stable across runs.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Position of edge `(u, v)` in the canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = (u.min(v) as u32, u.max(v) as u32);
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex_set(&self, a: VertexSet) -> Result<(), GraphError> {
        if a.bits() & !low_bits(self.n) != 0 {
            let vertex = (a.bits() & !low_bits(self.n)).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    /// Edges with both endpoints inside `a`.
    pub fn induced_edges(&self, a: VertexSet) -> Result<EdgeSubset, GraphError> {
        self.check_vertex_set(a)?;
        let mut es = EdgeSubset::empty(self.num_edges());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if a.contains(u as usize) && a.contains(v as usize) {
                es.insert(i);
            }
        }
        Ok(es)
    }

    /// Edges with one endpoint in `a` and the other in `b`; the sets must be
    /// disjoint.
    pub fn cut(&self, a: VertexSet, b: VertexSet) -> Result<EdgeSubset, GraphError> {
        self.check_vertex_set(a)?;
        self.check_vertex_set(b)?;
        if !a.is_disjoint(b) {
            return Err(GraphError::OverlappingSets);
        }
        let mut es = EdgeSubset::empty(self.num_edges());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            if (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)) {
                es.insert(i);
            }
        }
        Ok(es)
    }

    /// Complement of `h` within this graph's edge set.
    pub fn complement_within(&self, h: &EdgeSubset) -> Result<EdgeSubset, GraphError> {
        self.check_mask(h)?;
        Ok(h.complement())
    }

    fn check_mask(&self, h: &EdgeSubset) -> Result<(), GraphError> {
        if h.num_edges() != self.num_edges() {
            return Err(GraphError::ForeignMask {
                mask_edges: h.num_edges(),
                graph_edges: self.num_edges(),
            });
        }
        Ok(())
    }

    /// Spanning subgraph keeping exactly the edges in `keep`.
    pub fn subgraph_with_edges(&self, keep: &EdgeSubset) -> Result<Graph, GraphError> {
        self.check_mask(keep)?;
        let kept = keep
            .iter()
            .map(|i| (self.edges[i].0 as usize, self.edges[i].1 as usize));
        Graph::new(self.n, kept)
    }

    /// The mask selecting the given edges, which must all be present.
    pub fn edge_subset<I>(&self, pairs: I) -> Result<EdgeSubset, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut es = EdgeSubset::empty(self.num_edges());
        for (u, v) in pairs {
            match self.edge_index(u, v) {
                Some(i) => es.insert(i),
                None => return Err(GraphError::NoSuchEdge(u, v)),
            }
        }
        Ok(es)
    }

    pub fn full_edge_set(&self) -> EdgeSubset {
        EdgeSubset::full(self.num_edges())
    }

    pub fn empty_edge_set(&self) -> EdgeSubset {
        EdgeSubset::empty(self.num_edges())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.num_edges(), self.edges)
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::EmptyClique);
    }
    let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    Graph::new(k, edges)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete multipartite graph: all edges between distinct parts, none inside.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(GraphError::BadPartSizes);
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(p).take(s));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if part[i] != part[j] {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// Erdős–Rényi graph `G(n, p)`: each pair kept independently with probability
/// `p`. Deterministic for a given seed; pairs are drawn in lexicographic
/// order, one draw each.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::BadProbability(p));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}
