//! Reductions to (bipartite) perfect matching: the Tutte gadget for
//! `f`-factors, its parity variant for odd `[1, b]`-factors, and the
//! bipartite double cover for fractional perfect matchings.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::max_matching_lists;

/// Largest gadget (in nodes) that will be built.
pub const GADGET_MAX_NODES: usize = 512;

const NONE: usize = usize::MAX;

/// A gadget graph together with, for each original edge, the two end nodes
/// standing for it.
struct Gadget {
    adj: Vec<Vec<usize>>,
    edge_ends: Vec<(Edge, usize, usize)>,
}

impl Gadget {
    fn add(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    /// Builds per-vertex edge ends plus `absorbers[v]` extra nodes joined
    /// to every end of `v`. With `clique_ends`, the ends of each vertex are
    /// also pairwise adjacent.
    fn build(g: &Graph, absorbers: &[usize], clique_ends: bool) -> Result<Gadget> {
        let n = g.order();
        let deg = g.degrees();
        let nodes: usize = (0..n).map(|v| deg[v] + absorbers[v]).sum();
        if nodes > GADGET_MAX_NODES {
            return Err(Error::Capacity(format!(
                "gadget needs {nodes} nodes, limit is {GADGET_MAX_NODES}"
            )));
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + deg[v] + absorbers[v];
        }
        let mut gad = Gadget {
            adj: vec![Vec::new(); nodes],
            edge_ends: Vec::with_capacity(g.size()),
        };
        let end_of = |v: usize, w: usize| -> usize {
            let pos = g.neighbors(v).iter().position(|x| x == w).expect("edge");
            start[v] + pos
        };
        for v in 0..n {
            let ends = start[v]..start[v] + deg[v];
            for a in start[v] + deg[v]..start[v + 1] {
                for e in ends.clone() {
                    gad.add(a, e);
                }
            }
            if clique_ends {
                for e in ends.clone() {
                    for f in start[v]..e {
                        gad.add(f, e);
                    }
                }
            }
        }
        for e in g.edges() {
            let (a, b) = (end_of(e.u, e.v), end_of(e.v, e.u));
            gad.add(a, b);
            gad.edge_ends.push((e, a, b));
        }
        Ok(gad)
    }

    /// The factor read off a perfect matching of the gadget, if any.
    fn solve(&self, n: usize) -> Option<Graph> {
        let mate = max_matching_lists(&self.adj);
        if mate.iter().any(|&m| m == NONE) {
            return None;
        }
        let mut h = Graph::empty(n).expect("order bounded by the input graph");
        for &(e, a, b) in &self.edge_ends {
            if mate[a] == b {
                h.link(e.u, e.v);
            }
        }
        Some(h)
    }
}

/// `f`-factor via the Tutte gadget: `d(v)` end nodes fully joined to
/// `d(v) − f(v)` internal nodes. Requires `f(v) <= d(v)`.
pub fn f_factor_gadget(g: &Graph, f: &[usize]) -> Result<Option<Graph>> {
    let deg = g.degrees();
    let internal: Vec<usize> = (0..g.order()).map(|v| deg[v] - f[v]).collect();
    Ok(Gadget::build(g, &internal, false)?.solve(g.order()))
}

/// Odd `[1, b]`-factor via a parity gadget: the ends of `v` form a clique
/// (unused ends pair up among themselves) and `d − b` absorbers (or one
/// absorber when `d < b` is even) force the used count odd and at most `b`.
pub fn odd_factor_gadget(g: &Graph, b: usize) -> Result<Option<Graph>> {
    let absorbers: Vec<usize> = g
        .degrees()
        .into_iter()
        .map(|d| if d >= b { d - b } else { (d + 1) % 2 })
        .collect();
    Ok(Gadget::build(g, &absorbers, true)?.solve(g.order()))
}

/// Maximum matching of the bipartite double cover (left copy `v′`, right
/// copy `v″`, edge `uv` giving `u′v″` and `v′u″`) by augmenting paths.
/// Returns `right[v]` = the left vertex matched to `v″`.
pub fn double_cover_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let mut right: Vec<Option<usize>> = vec![None; n];
    fn augment(g: &Graph, u: usize, seen: &mut [bool], right: &mut [Option<usize>]) -> bool {
        for w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if right[w].is_none() || augment(g, right[w].unwrap(), seen, right) {
                right[w] = Some(u);
                return true;
            }
        }
        false
    }
    for u in 0..n {
        let mut seen = vec![false; n];
        augment(g, u, &mut seen, &mut right);
    }
    right
}
