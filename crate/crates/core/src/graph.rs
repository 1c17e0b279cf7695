//! Immutable small-graph values with one `u64` adjacency row per vertex.
//!
//! The vertex cap of 64 keeps every neighborhood a single machine word, so
//! set operations (intersection, union, popcount) are O(1). Desk-scale
//! searches never need more than a dozen vertices; the headroom is for
//! constructions like 50-vertex books.

use crate::{Error, Result};

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex ids `0..n` of some host graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    /// Iterates members in increasing id order.
    pub fn iter(&self) -> BitIter {
        BitIter(self.0)
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex id {v} out of range");
            s.insert(v);
        }
        s
    }
}

/// Iterator over the set bits of a word, in increasing position order.
#[derive(Debug, Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An undirected simple graph on vertex ids `0..n`, `n <= 64`.
///
/// Values are immutable after construction; every operation is a pure
/// function returning a new graph, so graphs can be shared freely between
/// concurrent tasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            requested: n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Loops are rejected; duplicate edges
    /// are allowed and collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric,
    /// irreflexive and confined to the low `n` bits; checked in debug builds.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        {
            let mask = VertexSet::full(n).0;
            for (i, &row) in adj.iter().enumerate() {
                debug_assert_eq!(row & !mask, 0, "row {i} has bits outside 0..{n}");
                debug_assert_eq!(row >> i & 1, 0, "loop at vertex {i}");
                for j in BitIter(row) {
                    debug_assert_ne!(adj[j] >> i & 1, 0, "asymmetry at ({i},{j})");
                }
            }
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1))).map(move |v| (u, v))
        })
    }

    /// Non-edges as `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The graph with the same vertices and complemented adjacency.
    #[allow(clippy::needless_range_loop)]
    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & mask & !(1u64 << v))
            .collect();
        Graph::from_rows(adj)
    }

    /// Returns a copy with edge `(u, v)` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1u64 << v;
        adj[v] |= 1u64 << u;
        Ok(Graph::from_rows(adj))
    }

    /// Disjoint union followed by all cross edges (the join `G1 ∇ G2`).
    #[allow(clippy::needless_range_loop)]
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let cross_lo = VertexSet::full(self.n).0;
        let cross_hi = VertexSet::full(n).0 & !cross_lo;
        for v in 0..self.n {
            adj[v] = self.adj[v] | cross_hi;
        }
        for v in 0..other.n {
            adj[self.n + v] = (other.adj[v] << self.n) | cross_lo;
        }
        Ok(Graph::from_rows(adj))
    }

    /// Block-diagonal union of any number of graphs.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let mut offset = 0;
        for g in parts {
            for v in 0..g.n {
                adj[offset + v] = g.adj[v] << offset;
            }
            offset += g.n;
        }
        Ok(Graph::from_rows(adj))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let keep = VertexSet(VertexSet::full(self.n).0 & !(1u64 << v));
        self.induced(&keep)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
        Ok(Graph::from_rows(adj))
    }

    /// Contracts the edge `(u, v)`: the merged vertex keeps the smaller id,
    /// takes the union of both neighborhoods, and labels are compacted so the
    /// result lives on `0..n-1`. Deterministic relabeling keeps witnesses
    /// reproducible.
    #[allow(clippy::needless_range_loop)]
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let merged = (self.adj[keep] | self.adj[gone]) & !(1u64 << keep) & !(1u64 << gone);
        let mut rows = self.adj.clone();
        rows[keep] = merged;
        for w in 0..self.n {
            if w != keep && merged >> w & 1 == 1 {
                rows[w] |= 1u64 << keep;
            }
            rows[w] &= !(1u64 << gone);
        }
        // Drop `gone` and shift higher ids down by one.
        let lo = (1u64 << gone) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        for (w, &row) in rows.iter().enumerate() {
            if w == gone {
                continue;
            }
            adj.push((row & lo) | ((row >> 1) & !lo));
        }
        Ok(Graph::from_rows(adj))
    }

    /// Replaces the edge `(u, v)` by a path through `count` new degree-2
    /// vertices appended at ids `n..n+count`.
    pub fn subdivide_edge(&self, u: usize, v: usize, count: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        if count == 0 {
            return Ok(self.clone());
        }
        let n = self.n + count;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        adj[u] &= !(1u64 << v);
        adj[v] &= !(1u64 << u);
        let mut prev = u;
        for k in 0..count {
            let w = self.n + k;
            adj[prev] |= 1u64 << w;
            adj[w] |= 1u64 << prev;
            prev = w;
        }
        adj[prev] |= 1u64 << v;
        adj[v] |= 1u64 << prev;
        Ok(Graph::from_rows(adj))
    }

    /// Subgraph induced by `sub`, relabeled to `0..|sub|` preserving id order.
    pub fn induced(&self, sub: &VertexSet) -> Result<Graph> {
        if !sub.is_subset_of(VertexSet::full(self.n)) {
            let bad = sub
                .difference(VertexSet::full(self.n))
                .iter()
                .next()
                .unwrap();
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.n,
            });
        }
        let ids = sub.to_vec();
        let mut adj = vec![0u64; ids.len()];
        for (new_u, &u) in ids.iter().enumerate() {
            let row = self.adj[u] & sub.0;
            for (new_v, &v) in ids.iter().enumerate() {
                if row >> v & 1 == 1 {
                    adj[new_u] |= 1u64 << new_v;
                }
            }
        }
        Ok(Graph::from_rows(adj))
    }

    /// Vertices reachable from `start` within `within` (which must contain it).
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        debug_assert!(within >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach(0, VertexSet::full(self.n).0).count_ones() as usize == self.n
    }

    /// Maximal connected pieces, ordered by smallest member id.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = VertexSet::full(self.n).0;
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.reach(start, remaining);
            out.push(VertexSet(comp));
            remaining &= !comp;
        }
        out
    }

    /// Vertices whose closed neighborhood is the whole vertex set.
    pub fn dominating_vertices(&self) -> VertexSet {
        let full = VertexSet::full(self.n).0;
        let mut out = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.adj[v] | (1u64 << v) == full {
                out.insert(v);
            }
        }
        out
    }

    /// Internal accessor for the raw rows.
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as cons;

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let degsum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(degsum, 2 * g.edge_count());
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (1, 4), (0, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_k5_is_empty() {
        let k5 = cons::complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
    }

    #[test]
    fn join_order_and_size() {
        let k1 = cons::complete(1).unwrap();
        let c4 = cons::cycle(4).unwrap();
        let w5 = k1.join(&c4).unwrap();
        assert_eq!(w5.n(), 5);
        assert_eq!(w5.edge_count(), 8);

        let k2 = cons::complete(2).unwrap();
        let e8 = Graph::empty(8).unwrap();
        let b28 = k2.join(&e8).unwrap();
        assert_eq!(b28.n(), 10);
        assert_eq!(b28.edge_count(), 17);
    }

    #[test]
    fn join_capacity_checked() {
        let a = Graph::empty(40).unwrap();
        let b = Graph::empty(40).unwrap();
        assert!(matches!(a.join(&b), Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn disjoint_union_sums() {
        let k4 = cons::complete(4).unwrap();
        let g = Graph::disjoint_union(&[k4.clone(), k4.clone(), k4]).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.components().len(), 3);

        let empty = Graph::disjoint_union(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.components().len(), 0);
    }

    #[test]
    fn contract_c5_gives_c4() {
        let c5 = cons::cycle(5).unwrap();
        let c4 = cons::cycle(4).unwrap();
        let contracted = c5.contract_edge(0, 1).unwrap();
        assert!(crate::canon::is_isomorphic(&contracted, &c4));
    }

    #[test]
    fn contract_k33_edge() {
        let k33 = cons::complete_multipartite_parts(&[3, 3]).unwrap();
        let (u, v) = k33.edges().next().unwrap();
        let g = k33.contract_edge(u, v).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn delete_vertex_of_k5() {
        let k5 = cons::complete(5).unwrap();
        let g = k5.delete_vertex(0).unwrap();
        assert!(crate::canon::is_isomorphic(&g, &cons::complete(4).unwrap()));
        assert_eq!(g.edge_count(), k5.edge_count() - k5.degree(0));
    }

    #[test]
    fn subdivide_k3_once_gives_c4() {
        let k3 = cons::complete(3).unwrap();
        let g = k3.subdivide_edge(0, 1, 1).unwrap();
        assert!(crate::canon::is_isomorphic(&g, &cons::cycle(4).unwrap()));
    }

    #[test]
    fn induced_triangle_of_k5() {
        let k5 = cons::complete(5).unwrap();
        let t = k5.induced(&VertexSet::from_iter([0, 2, 4])).unwrap();
        assert_eq!((t.n(), t.edge_count()), (3, 3));
    }

    #[test]
    fn induced_independent_part_of_book() {
        let b28 = cons::book(2, 8).unwrap();
        let part = VertexSet::from_iter(2..10);
        let g = b28.induced(&part).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let k3 = cons::complete(3).unwrap();
        assert!(matches!(
            k3.induced(&VertexSet::from_iter([0, 3])),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn book_is_connected() {
        for gamma in 1..4 {
            let b = cons::book(gamma, 5).unwrap();
            assert!(b.is_connected());
        }
    }

    #[test]
    fn dominating_vertices_of_book() {
        let b = cons::book(3, 7).unwrap();
        assert_eq!(b.dominating_vertices(), VertexSet::from_iter([0, 1, 2]));
        let c5 = cons::cycle(5).unwrap();
        assert!(c5.dominating_vertices().is_empty());
    }

    #[test]
    fn missing_edge_errors() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            g.contract_edge(1, 2),
            Err(Error::MissingEdge { .. })
        ));
        assert!(matches!(
            g.delete_edge(1, 2),
            Err(Error::MissingEdge { .. })
        ));
        assert!(matches!(
            g.subdivide_edge(0, 2, 1),
            Err(Error::MissingEdge { .. })
        ));
    }
}
