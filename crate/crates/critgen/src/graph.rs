//! Small simple graphs with one-word adjacency bitsets.
//!
//! Every graph in this crate lives on at most [`MAX_VERTICES`] vertices so
//! that a vertex set fits in a single `u64` and the graph6 short form always
//! applies.

use thiserror::Error;

/// Hard cap on the vertex count. One machine word per adjacency row.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has too many vertices ({0} > {MAX_VERTICES})")]
    Oversize(usize),
    #[error("vertex {0} out of range for graph on {1} vertices")]
    BadVertex(usize, usize),
}

/// A simple undirected graph on `n <= 62` vertices.
///
/// `adj[v]` is the neighborhood of `v` as a bitset. Values are immutable
/// after construction; all operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Oversize(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::BadVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::BadVertex(v, n));
            }
            if u != v {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in iter_bits(self.adj[u] & !((1u64 << (u + 1)) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// N(X): union of neighborhoods of the vertices in `mask`, minus `mask`.
    pub fn neighborhood_of_set(&self, mask: u64) -> u64 {
        let mut nb = 0;
        for v in iter_bits(mask) {
            nb |= self.adj[v];
        }
        nb & !mask
    }

    /// Delete a vertex, compacting the labels above it downward.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::BadVertex(v, self.n));
        }
        let low = (1u64 << v) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u];
            adj.push((row & low) | ((row >> (v + 1)) << v));
        }
        Ok(Graph { n: self.n - 1, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::Oversize(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Add `m` vertices adjacent to every other vertex (including each other).
    pub fn add_universal_vertices(&self, m: usize) -> Result<Graph, GraphError> {
        let n = self.n + m;
        if n > MAX_VERTICES {
            return Err(GraphError::Oversize(n));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let new_bits = full & !self.full_mask();
        let mut adj: Vec<u64> = self.adj.iter().map(|&row| row | new_bits).collect();
        for v in self.n..n {
            adj.push(full & !(1u64 << v));
        }
        Ok(Graph { n, adj })
    }

    /// The graph plus one new vertex (label `n`) with neighborhood `mask`.
    pub fn extend_with(&self, mask: u64) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::Oversize(self.n + 1));
        }
        debug_assert_eq!(mask & !self.full_mask(), 0);
        let mut adj = Vec::with_capacity(self.n + 1);
        for v in 0..self.n {
            adj.push(self.adj[v] | (((mask >> v) & 1) << self.n));
        }
        adj.push(mask);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Subgraph induced by the vertices in `mask`, labels compacted in order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = iter_bits(mask & self.full_mask()).collect();
        let mut g = Graph::empty(verts.len()).unwrap();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Relabel by `perm`, where `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in iter_bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Connected components as vertex bitsets, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.full_mask())
    }

    /// Components of the subgraph induced by `mask` (as bitsets in the
    /// original labeling).
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask & self.full_mask();
        let mut comps = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grow = 0;
                for v in iter_bits(comp) {
                    grow |= self.adj[v] & rest;
                }
                grow &= !comp;
                if grow == 0 {
                    break;
                }
                comp |= grow;
            }
            comps.push(comp);
            rest &= !comp;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        iter_bits(mask).all(|v| (mask & !(1u64 << v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        iter_bits(mask).all(|v| mask & self.adj[v] == 0)
    }

    /// Internal consistency check: symmetry, irreflexivity, bits in range.
    pub fn check_invariants(&self) -> bool {
        let full = self.full_mask();
        for v in 0..self.n {
            if self.adj[v] & !full != 0 || self.adj[v] >> v & 1 == 1 {
                return false;
            }
            for u in iter_bits(self.adj[v]) {
                if self.adj[u] >> v & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterate over the set bit indices of a word, ascending.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// All nonempty subsets of `mask` with at most `max_size` bits, in
/// lexicographic order of their sorted vertex lists.
pub fn subsets_up_to(mask: u64, max_size: usize) -> Vec<u64> {
    let verts: Vec<usize> = iter_bits(mask).collect();
    let mut out = Vec::new();
    fn rec(verts: &[usize], start: usize, cur: u64, left: usize, out: &mut Vec<u64>) {
        for i in start..verts.len() {
            let next = cur | 1u64 << verts[i];
            out.push(next);
            if left > 1 {
                rec(verts, i + 1, next, left - 1, out);
            }
        }
    }
    if max_size > 0 {
        rec(&verts, 0, 0, max_size, &mut out);
    }
    out
}
