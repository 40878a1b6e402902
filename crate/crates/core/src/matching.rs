//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and perfect-matching counting.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges
            .iter()
            .flat_map(|e| [e.u, e.v])
            .collect::<VertexSet>()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.len() == n
    }

    /// `mate[v]`, or `None` if `v` is exposed.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut m = vec![None; n];
        for e in &self.edges {
            m[e.u] = Some(e.v);
            m[e.v] = Some(e.u);
        }
        m
    }

    /// Checks disjointness and that every edge is present in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for e in &self.edges {
            if !g.has_edge(e.u, e.v) || seen.contains(e.u) || seen.contains(e.v) {
                return false;
            }
            seen.insert(e.u);
            seen.insert(e.v);
        }
        true
    }
}

/// Blossom search state over an adjacency-list graph.
struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns
    /// its other (exposed) end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum matching on an adjacency-list graph; `mate[v] == usize::MAX`
/// marks an exposed vertex.
pub fn max_matching_lists(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| w != v && mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut b = Blossom::new(adj, mate);
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(end) = b.find_path(v) {
                b.augment(end);
            }
        }
    }
    b.mate
}

/// True iff the adjacency-list graph has a perfect matching.
pub fn has_perfect_matching_lists(adj: &[Vec<usize>]) -> bool {
    adj.len() % 2 == 0 && max_matching_lists(adj).iter().all(|&m| m != NONE)
}

pub(crate) fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn mates_to_matching(mate: &[usize]) -> Matching {
    let mut edges: Vec<Edge> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != NONE && v < m)
        .map(|(v, &m)| Edge::new(v, m))
        .collect();
    edges.sort();
    Matching { edges }
}

/// Maximum cardinality matching.
pub fn max_matching(g: &Graph) -> Matching {
    mates_to_matching(&max_matching_lists(&adjacency_lists(g)))
}

/// Matching number `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

/// Whether `m` (a perfect matching of `g`) lies on an `m`-alternating
/// cycle: for some `uv ∈ m`, an alternating path from `u` to `v` avoiding
/// the edge `uv` closes such a cycle.
pub fn has_alternating_cycle(g: &Graph, m: &Matching) -> bool {
    let n = g.order();
    let base_adj = adjacency_lists(g);
    let mut mate = vec![NONE; n];
    for e in &m.edges {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    for e in &m.edges {
        let mut adj = base_adj.clone();
        adj[e.u].retain(|&w| w != e.v);
        adj[e.v].retain(|&w| w != e.u);
        let mut local = mate.clone();
        local[e.u] = NONE;
        local[e.v] = NONE;
        let mut b = Blossom::new(&adj, local);
        if b.find_path(e.u).is_some() {
            return true;
        }
    }
    false
}

/// `min(#perfect matchings, cap)` by branching on the unmatched vertex with
/// the fewest unmatched neighbours.
pub fn count_perfect_matchings(g: &Graph, cap: usize) -> usize {
    fn go(g: &Graph, free: u64, cap: usize, found: &mut usize) {
        if *found >= cap {
            return;
        }
        if free == 0 {
            *found += 1;
            return;
        }
        let mut best = NONE;
        let mut best_deg = usize::MAX;
        for v in VertexSet::from_bits(free) {
            let d = (g.row(v) & free).count_ones() as usize;
            if d < best_deg {
                best = v;
                best_deg = d;
                if d == 0 {
                    return;
                }
            }
        }
        let rest = free & !(1u64 << best);
        for w in VertexSet::from_bits(g.row(best) & rest) {
            go(g, rest & !(1u64 << w), cap, found);
            if *found >= cap {
                return;
            }
        }
    }
    if g.order() % 2 == 1 || cap == 0 {
        return 0;
    }
    let mut found = 0;
    go(g, g.vertices().bits(), cap, &mut found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::from_edges(10, e).unwrap()
    }

    /// Brute force over edge subsets.
    fn brute_matching_number(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for mask in 0u64..1 << edges.len() {
            let mut seen = 0u64;
            let mut ok = true;
            for (i, e) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let b = 1 << e.u | 1 << e.v;
                    if seen & b != 0 {
                        ok = false;
                        break;
                    }
                    seen |= b;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn small_cases() {
        assert_eq!(matching_number(&cycle(5)), 2);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(matching_number(&star), 1);
        let p = petersen();
        assert_eq!(brute_matching_number(&p), 5);
        let m = max_matching(&p);
        assert_eq!(m.len(), 5);
        assert!(m.is_valid_in(&p));
    }

    #[test]
    fn counting() {
        assert_eq!(count_perfect_matchings(&Graph::complete(4).unwrap(), 10), 3);
        assert_eq!(count_perfect_matchings(&cycle(6), 10), 2);
        let k33 = Graph::empty(3)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        assert_eq!(count_perfect_matchings(&k33, 10), 6);
        assert_eq!(count_perfect_matchings(&k33, 4), 4);
        assert_eq!(count_perfect_matchings(&cycle(5), 10), 0);
        assert_eq!(count_perfect_matchings(&Graph::empty(0).unwrap(), 10), 1);
    }

    #[test]
    fn alternating_cycles() {
        let c4 = cycle(4);
        let m = max_matching(&c4);
        assert!(has_alternating_cycle(&c4, &m));
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = max_matching(&p4);
        assert!(!has_alternating_cycle(&p4, &m));
    }

    #[test]
    fn blossom_matches_brute_force_on_all_5_vertex_graphs() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_edge_mask(5, mask);
            assert_eq!(matching_number(&g), brute_matching_number(&g), "{g:?}");
        }
    }
}
