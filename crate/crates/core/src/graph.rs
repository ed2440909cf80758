//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` row of adjacency bits, so neighborhood
//! intersections are single word operations. Vertices are dense `0..order`
//! labels.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair {
    pub u: usize,
    pub v: usize,
}

impl EdgePair {
    /// Normalizes the endpoints so that `u < v`. Rejects loops.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(EdgePair { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(EdgePair { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        (1u64 << self.u) | (1u64 << self.v)
    }
}

impl From<EdgePair> for (usize, usize) {
    fn from(e: EdgePair) -> Self {
        (e.u, e.v)
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A simple undirected graph.
///
/// Invariants: rows are symmetric, the diagonal is clear and no bit at a
/// column `>= order` is set. All constructors uphold them, so the type is
/// immutable from the outside.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            order: n,
            adj: [0; MAX_ORDER],
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = low_bits(n);
        let mut adj = [0; MAX_ORDER];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = full & !(1u64 << v);
        }
        Ok(Graph { order: n, adj })
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// The path `0-1-...-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<E: Copy + Into<(usize, usize)>>(n: usize, edges: &[E]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            g.set(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating the invariants.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mut adj = [0; MAX_ORDER];
        let full = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            adj[v] = row;
        }
        for u in 0..n {
            for w in Bits(adj[u]) {
                if adj[w] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter("adjacency rows are not symmetric"));
                }
            }
        }
        Ok(Graph { order: n, adj })
    }

    #[inline]
    pub(crate) fn from_rows_unchecked(order: usize, adj: [u64; MAX_ORDER]) -> Self {
        debug_assert!(order <= MAX_ORDER);
        Graph { order, adj }
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Adjacency rows `0..order`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<EdgePair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in Bits(self.adj[u] & !low_bits(u + 1)) {
                out.push(EdgePair { u, v });
            }
        }
        out
    }

    /// Missing pairs `u < v` in lexicographic order.
    pub fn non_edges(&self) -> Vec<EdgePair> {
        let full = self.vertex_mask();
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in Bits(!self.adj[u] & full & !low_bits(u + 1)) {
                out.push(EdgePair { u, v });
            }
        }
        out
    }

    /// Returns a copy with the pair `e` added. Rejects pairs already present.
    pub fn with_edge(&self, e: EdgePair) -> Result<Self> {
        self.check_pair(e)?;
        if self.has_edge(e.u, e.v) {
            return Err(Error::EdgePresent(e.u, e.v));
        }
        let mut g = self.clone();
        g.set(e.u, e.v);
        Ok(g)
    }

    /// Adds a non-edge without validation. Callers guarantee `e` is in range.
    #[inline]
    pub(crate) fn plus_edge(&self, e: EdgePair) -> Self {
        let mut g = self.clone();
        g.set(e.u, e.v);
        g
    }

    pub(crate) fn check_pair(&self, e: EdgePair) -> Result<()> {
        if e.u == e.v {
            return Err(Error::SelfLoop(e.u));
        }
        for x in [e.u, e.v] {
            if x >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        Ok(())
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.order + other.order;
        check_order(n)?;
        let mut adj = self.adj;
        for v in 0..other.order {
            adj[self.order + v] = other.adj[v] << self.order;
        }
        Ok(Graph { order: n, adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.order;
        for v in 0..self.order {
            g.adj[v] |= right;
        }
        for v in self.order..g.order {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let full = self.vertex_mask();
        let mut adj = [0; MAX_ORDER];
        for v in 0..self.order {
            adj[v] = !self.adj[v] & full & !(1u64 << v);
        }
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Subgraph induced by `mask`, relabeled to `0..popcount(mask)` in
    /// increasing vertex order.
    pub fn induced(&self, mask: u64) -> Self {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = Bits(mask).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = [0; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            for w in Bits(self.adj[v] & mask) {
                adj[i] |= 1u64 << pos[w];
            }
        }
        Graph {
            order: verts.len(),
            adj,
        }
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(Error::InvalidParameter("permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.order || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation"));
            }
            seen |= 1u64 << p;
        }
        let mut adj = [0; MAX_ORDER];
        for v in 0..self.order {
            for w in Bits(self.adj[v]) {
                adj[perm[v]] |= 1u64 << perm[w];
            }
        }
        Ok(Graph {
            order: self.order,
            adj,
        })
    }

    /// True iff `mask` spans a complete subgraph.
    #[inline]
    pub fn is_clique(&self, mask: u64) -> bool {
        Bits(mask).all(|v| mask & !self.adj[v] & !(1u64 << v) == 0)
    }

    /// Vertex sets of the connected components of the subgraph induced by
    /// `mask`, ordered by smallest vertex.
    pub fn components(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

#[inline]
fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}
