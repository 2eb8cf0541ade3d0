//! Compact simple undirected graphs on at most 64 labeled vertices.
//!
//! A vertex's neighborhood is a single `u64` bitmask, so adjacency tests,
//! candidate intersections, and degree counts are one machine instruction
//! each. Everything downstream (embedding searches, enumeration, scans)
//! leans on that. Graphs are immutable after construction; the "mutating"
//! operations return new graphs.

use std::fmt;

/// Hard cap on graph order: one adjacency row per vertex must fit a machine
/// word.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { v: usize, n: usize },
    LoopEdge { v: usize },
    OrderOutOfRange { what: &'static str, got: usize, min: usize, max: usize },
    PartCountMismatch { parts: usize, vertices: usize },
    EmptyPart { index: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices requested; this crate supports at most {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for a graph on {n} vertices")
            }
            GraphError::LoopEdge { v } => write!(f, "loop edge at vertex {v} rejected"),
            GraphError::OrderOutOfRange { what, got, min, max } => {
                write!(f, "{what}: order {got} outside supported range [{min}, {max}]")
            }
            GraphError::PartCountMismatch { parts, vertices } => {
                write!(f, "blowup needs one part per vertex: got {parts} parts for {vertices} vertices")
            }
            GraphError::EmptyPart { index } => {
                write!(f, "blowup part {index} is empty; part sizes must be at least 1")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// Part sizes for a blowup, one entry per vertex of the pattern being
/// blown up. All sizes are at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSpec {
    sizes: Vec<usize>,
}

impl PartSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self, GraphError> {
        for (index, &s) in sizes.iter().enumerate() {
            if s == 0 {
                return Err(GraphError::EmptyPart { index });
            }
        }
        Ok(PartSpec { sizes })
    }

    /// `count` parts of equal `size`.
    pub fn uniform(count: usize, size: usize) -> Result<Self, GraphError> {
        PartSpec::new(vec![size; count])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Immutable simple undirected graph with 0-based contiguous vertex labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    edge_count: u32,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// deduplicated; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Self::from_rows(adj))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { adj: vec![0; n], edge_count: 0 })
    }

    /// Complete graph K_r.
    pub fn complete(r: usize) -> Result<Self, GraphError> {
        if !(1..=MAX_VERTICES).contains(&r) {
            return Err(GraphError::OrderOutOfRange { what: "complete graph", got: r, min: 1, max: MAX_VERTICES });
        }
        let full = mask_below(r);
        let adj = (0..r).map(|v| full & !(1u64 << v)).collect();
        Ok(Self::from_rows(adj))
    }

    /// Cycle C_r with edges {i, i+1 mod r}.
    pub fn cycle(r: usize) -> Result<Self, GraphError> {
        if !(3..=MAX_VERTICES).contains(&r) {
            return Err(GraphError::OrderOutOfRange { what: "cycle graph", got: r, min: 3, max: MAX_VERTICES });
        }
        let edges: Vec<(usize, usize)> = (0..r).map(|i| (i, (i + 1) % r)).collect();
        Graph::new(r, &edges)
    }

    /// Turán graph T(n, r): the complete r-partite graph on n vertices with
    /// part sizes as equal as possible. Larger parts come first and parts
    /// occupy contiguous label ranges, so the labeling is deterministic.
    pub fn turan(n: usize, r: usize) -> Result<Self, GraphError> {
        if r < 2 {
            return Err(GraphError::OrderOutOfRange { what: "Turán graph parts", got: r, min: 2, max: MAX_VERTICES });
        }
        if n < r || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange { what: "Turán graph order", got: n, min: r, max: MAX_VERTICES });
        }
        let q = n / r;
        let rem = n % r;
        let sizes: Vec<usize> = (0..r).map(|i| if i < rem { q + 1 } else { q }).collect();
        Graph::complete(r)?.blowup(&PartSpec::new(sizes)?)
    }

    /// Replaces vertex `v` by an independent set of `parts.sizes()[v]`
    /// vertices; two new vertices are adjacent iff their originals were.
    /// Blocks occupy contiguous label ranges in original vertex order.
    pub fn blowup(&self, parts: &PartSpec) -> Result<Self, GraphError> {
        let n = self.n();
        if parts.sizes().len() != n {
            return Err(GraphError::PartCountMismatch { parts: parts.sizes().len(), vertices: n });
        }
        let total = parts.total();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: total });
        }
        let mut start = vec![0usize; n];
        let mut acc = 0usize;
        for v in 0..n {
            start[v] = acc;
            acc += parts.sizes()[v];
        }
        let mut block_mask = vec![0u64; n];
        for v in 0..n {
            block_mask[v] = mask_below(parts.sizes()[v]) << start[v];
        }
        let mut adj = vec![0u64; total];
        for v in 0..n {
            let mut row = 0u64;
            let mut nbrs = self.adj[v];
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                row |= block_mask[u];
            }
            for offset in 0..parts.sizes()[v] {
                adj[start[v] + offset] = row;
            }
        }
        Ok(Self::from_rows(adj))
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count as usize
    }

    /// Neighborhood of `v` as a bitmask.
    ///
    /// Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        assert!(v < self.n(), "vertex {v} out of range for n = {}", self.n());
        self.adj[v]
    }

    /// Unchecked row access for hot loops.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        debug_assert!(v < self.n());
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n() && v < self.n());
        self.adj[u] & (1u64 << v) != 0
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        mask_below(self.n())
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            let mut higher = self.adj[u] & !mask_below(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// The graph with vertex `v` removed and labels above `v` shifted down.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n(), "vertex {v} out of range for n = {}", self.n());
        let keep_low = mask_below(v);
        let mut adj = Vec::with_capacity(self.n() - 1);
        for u in 0..self.n() {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & keep_low) | ((row >> (v + 1)) << v));
        }
        Self::from_rows(adj)
    }

    /// Extends the graph by one vertex whose neighborhood is `neighbors`
    /// (a mask over the existing vertices).
    pub fn add_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        let n = self.n();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: n + 1 });
        }
        if neighbors & !self.vertex_mask() != 0 {
            let v = 63 - (neighbors & !self.vertex_mask()).leading_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        let mut nbrs = neighbors;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            adj[u] |= 1u64 << n;
        }
        Ok(Self::from_rows(adj))
    }

    /// Adds a single edge (no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        if u == v {
            return Err(GraphError::LoopEdge { v });
        }
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1u64 << v;
        adj[v] |= 1u64 << u;
        Ok(Self::from_rows(adj))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of 0..n.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length must equal the order");
        debug_assert!({
            let mut seen = vec![false; n];
            perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
        });
        let mut adj = vec![0u64; n];
        for v in 0..n {
            let mut nbrs = self.adj[v];
            let mut row = 0u64;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                row |= 1u64 << perm[u];
            }
            adj[perm[v]] = row;
        }
        Self::from_rows(adj)
    }

    /// Internal constructor from adjacency rows assumed symmetric and
    /// loop-free; invariants are checked in debug builds.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &row)| row & (1 << v) == 0), "loop bit set");
        debug_assert!(adj.iter().all(|&row| row & !mask_below(n) == 0), "bits beyond n");
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v) & 1 == (adj[v] >> u) & 1)), "asymmetric");
        let total: u32 = adj.iter().map(|r| r.count_ones()).sum();
        Graph { adj, edge_count: total / 2 }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.edge_count(), self.edges())
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn mask_below(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
