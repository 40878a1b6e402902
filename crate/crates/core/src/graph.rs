//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one 64-bit neighbour mask per vertex, so vertex
//! subsets are plain `u64` bitsets and most structural queries reduce to a
//! handful of word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// The vertices `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(low_mask(end) & !low_mask(start))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
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

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert!(a != b, "loop at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Immutable simple undirected graph on `n <= 64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::Capacity(format!(
            "order {n} exceeds the {MAX_ORDER}-vertex limit"
        )))
    } else {
        Ok(())
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parameter(format!(
                    "edge ({a},{b}) out of range for order {n}"
                )));
            }
            if a == b {
                return Err(Error::Parameter(format!("loop at vertex {a}")));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour masks, checking symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(adj: &[u64]) -> Result<Graph> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Parameter(format!(
                    "vertex {v} has neighbours outside 0..{n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::Parameter(format!("loop at vertex {v}")));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for w in VertexSet(adj[u]) {
                if adj[w] & bit(u) == 0 {
                    return Err(Error::Parameter(format!(
                        "adjacency not symmetric at ({u},{w})"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// The labelled graph on `n` vertices whose edges are the set bits of
    /// `mask`, in the column order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        debug_assert!(n <= 11);
        let mut g = Graph {
            n,
            adj: [0; MAX_ORDER],
        };
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.link(i, j);
                }
                k += 1;
            }
        }
        g
    }

    #[inline]
    pub(crate) fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    #[inline]
    pub(crate) fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v);
        let mut g = self.clone();
        g.link(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.unlink(u, v);
        g
    }

    /// Non-edges `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = !self.adj[u] & low_mask(self.n) & !low_mask(u + 1);
            for v in VertexSet(missing) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Disjoint union; `other`'s vertices follow this graph's.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        check_order(self.n + other.n)?;
        let mut g = self.clone();
        g.n = self.n + other.n;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `k` disjoint copies of this graph.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        check_order(k.saturating_mul(self.n))?;
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = g.union(self)?;
        }
        Ok(g)
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts = set.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: verts.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &v) in verts.iter().enumerate() {
            for w in VertexSet(self.adj[v] & set.0) {
                g.adj[i] |= bit(index[w]);
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.n {
            for w in VertexSet(self.adj[u]) {
                g.adj[perm[u]] |= bit(perm[w]);
            }
        }
        g
    }

    /// Moves every neighbour of `v` outside `N(u) ∪ {u}` over to `u`.
    pub fn kelmans_shift(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n && v < self.n);
        let movable = self.adj[v] & !self.adj[u] & !bit(u);
        let mut g = self.clone();
        for w in VertexSet(movable) {
            g.unlink(v, w);
            g.link(u, w);
        }
        g
    }

    /// Neighbours of `v` that a Kelmans shift towards `u` would move.
    pub fn movable_neighbors(&self, u: usize, v: usize) -> VertexSet {
        VertexSet(self.adj[v] & !self.adj[u] & !bit(u))
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = within.0;
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for w in VertexSet(frontier) {
                    next |= self.adj[w];
                }
                next &= within.0 & !comp;
                comp |= next;
                frontier = next;
            }
            remaining &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = low_mask(self.n);
        let mut comp = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for w in VertexSet(frontier) {
                next |= self.adj[w];
            }
            next &= all & !comp;
            comp |= next;
            frontier = next;
        }
        comp == all
    }

    /// `o(G - S)`: number of odd-order components after deleting `s`.
    pub fn odd_components(&self, s: VertexSet) -> usize {
        let rest = self.vertices().difference(s);
        let mut count = 0;
        let mut remaining = rest.0;
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for w in VertexSet(frontier) {
                    next |= self.adj[w];
                }
                next &= rest.0 & !comp;
                comp |= next;
                frontier = next;
            }
            remaining &= !comp;
            count += (comp.count_ones() & 1) as usize;
        }
        count
    }

    /// `i(G - S)`: number of vertices left isolated after deleting `s`.
    pub fn isolated_vertices(&self, s: VertexSet) -> usize {
        let rest = self.vertices().difference(s);
        rest.iter().filter(|&v| self.adj[v] & rest.0 == 0).count()
    }

    /// All cut edges, by a lowpoint depth-first search.
    pub fn bridges(&self) -> Vec<Edge> {
        let mut disc = [usize::MAX; MAX_ORDER];
        let mut low = [0usize; MAX_ORDER];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, remaining neighbours)
            let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, self.adj[root])];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent, rest) = *top;
                if rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    top.2 &= rest - 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, self.adj[w]));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push(Edge::new(parent, v));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !bit(v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::complete(1)
            .unwrap()
            .join(&Graph::empty(leaves).unwrap())
            .unwrap()
    }

    #[test]
    fn empty_and_complete() {
        let g = Graph::empty(0).unwrap();
        assert_eq!((g.order(), g.size()), (0, 0));
        let g = Graph::empty(3).unwrap();
        assert_eq!((g.order(), g.size()), (3, 0));
        assert!(matches!(Graph::empty(65), Err(Error::Capacity(_))));
        assert!(Graph::complete(65).is_err());

        assert_eq!(Graph::complete(4).unwrap().size(), 6);
        assert_eq!(Graph::complete(1).unwrap(), Graph::empty(1).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert_eq!(Graph::complete(64).unwrap().size(), 64 * 63 / 2);
    }

    #[test]
    fn union_join_copies() {
        let k1 = Graph::complete(1).unwrap();
        let k5 = Graph::complete(5).unwrap();
        let g = k1.union(&k5).unwrap();
        assert_eq!((g.order(), g.size(), g.degree(0)), (6, 10, 0));
        assert_eq!(
            Graph::empty(2)
                .unwrap()
                .union(&Graph::empty(3).unwrap())
                .unwrap(),
            Graph::empty(5).unwrap()
        );
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.union(&k3).unwrap().size(), 6);

        let s = star(3);
        assert_eq!(s.degrees(), vec![3, 1, 1, 1]);
        let g = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(2).unwrap())
            .unwrap();
        assert_eq!(g.size(), 5);
        assert!(!g.has_edge(2, 3));

        assert_eq!(k1.copies(3).unwrap(), Graph::empty(3).unwrap());
        let pm = Graph::complete(2).unwrap().copies(2).unwrap();
        assert_eq!(pm.edges(), vec![Edge::new(0, 1), Edge::new(2, 3)]);
        assert_eq!(k5.copies(0).unwrap().order(), 0);
        assert!(k5.copies(13).is_err());
    }

    #[test]
    fn kelmans_on_small_graphs() {
        // path a-b-c: moving b's private neighbour c onto a gives a star at a
        let p3 = path(3);
        let g = p3.kelmans_shift(0, 1);
        assert_eq!(g.edges(), vec![Edge::new(0, 1), Edge::new(0, 2)]);
        // c's only neighbour b is already adjacent to a: nothing to move
        assert_eq!(p3.kelmans_shift(0, 2), p3);

        let c4 = cycle(4);
        let g = c4.kelmans_shift(0, 2);
        assert_eq!(g, c4);
        let g = c4.kelmans_shift(0, 1);
        assert_eq!(g.size(), 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn odd_and_isolated_counts() {
        let s = star(4);
        assert_eq!(s.odd_components(VertexSet::singleton(0)), 4);
        assert_eq!(cycle(6).odd_components(VertexSet::EMPTY), 0);
        assert_eq!(star(3).isolated_vertices(VertexSet::singleton(0)), 3);
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(k6.isolated_vertices(VertexSet::range(0, 4)), 0);
    }

    #[test]
    fn bridges_components_connectivity() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(tree.bridges().len(), 5);
        assert!(cycle(5).bridges().is_empty());
        // two triangles joined by an edge
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(g.bridges(), vec![Edge::new(2, 3)]);

        let k3 = Graph::complete(3).unwrap();
        let two = k3.union(&k3).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(!two.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        assert!(Graph::from_adjacency(&[0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(&[0b01]).is_err());
        assert!(Graph::from_adjacency(&[0b10, 0b01]).is_ok());
    }

    #[test]
    fn induced_and_permute() {
        let c5 = cycle(5);
        let p = c5.induced(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(p.edges(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        let q = c5.permute(&[4, 3, 2, 1, 0]);
        assert_eq!(q.size(), 5);
        assert!(q.has_edge(4, 3));
    }
}
