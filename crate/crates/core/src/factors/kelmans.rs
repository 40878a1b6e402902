//! The shifting sequence that carries a connected graph with a unique
//! perfect matching to `G(2n, 1)` without decreasing the spectral radius.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::max_matching;
use crate::spectral::{perron_vector, DEFAULT_TOL};

use super::is_unique_pm;

/// One step of the sequence: the processed matching edge, oriented so that
/// `x_u >= x_v` in the Perron vector of the graph before the step.
#[derive(Clone, Debug, PartialEq)]
pub struct KelmansStep {
    pub u: usize,
    pub v: usize,
    pub graph: Graph,
}

/// `[G_0, ..., G_{n−1}]` for a connected graph of order `2n` with a unique
/// perfect matching.
///
/// At step `i`, `u_i v_i` is the first (in edge order) cut edge of
/// `G_i[S_i]` lying in the matching; `v_i` loses its other neighbours in
/// `S_i` and `u_i` gains all of `S_i`.
pub fn kelmans_sequence_to_extremal(g: &Graph) -> Result<Vec<Graph>> {
    Ok(kelmans_steps(g)?.into_iter().map(|s| s.graph).collect())
}

/// Like [`kelmans_sequence_to_extremal`], also recording each processed
/// edge. The first entry carries `G_0` with `u == v == usize::MAX`.
pub fn kelmans_steps(g: &Graph) -> Result<Vec<KelmansStep>> {
    if !g.is_connected() || g.order() == 0 {
        return Err(Error::Disconnected);
    }
    if !is_unique_pm(g) {
        return Err(Error::NoUniquePerfectMatching);
    }
    let half = g.order() / 2;
    let mut remaining = max_matching(g).edges;
    let mut s = g.vertices();
    let mut cur = g.clone();
    let mut out = vec![KelmansStep {
        u: usize::MAX,
        v: usize::MAX,
        graph: cur.clone(),
    }];
    for _ in 0..half.saturating_sub(1) {
        let inside = restrict(&cur, s);
        let bridges = inside.bridges();
        let pos = remaining
            .iter()
            .position(|e| bridges.contains(e))
            .expect("a graph with a unique perfect matching has a cut edge in it");
        let e = remaining.remove(pos);
        let x = perron_vector(&cur, DEFAULT_TOL)?
            .perron
            .expect("connected graphs have a Perron vector");
        let (u, v) = if x[e.u] >= x[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        let mut next = cur.clone();
        for w in cur.neighbors(v).intersection(s) {
            if w != u {
                next.unlink(v, w);
            }
        }
        for w in s {
            if w != u {
                next.link(u, w);
            }
        }
        s.remove(u);
        s.remove(v);
        cur = next;
        out.push(KelmansStep {
            u,
            v,
            graph: cur.clone(),
        });
    }
    Ok(out)
}

/// Same labels, only the edges with both ends in `s`.
fn restrict(g: &Graph, s: VertexSet) -> Graph {
    let mut h = Graph::empty(g.order()).expect("same order");
    for e in g.edges() {
        if s.contains(e.u) && s.contains(e.v) {
            h.link(e.u, e.v);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::g_unique_pm;
    use crate::spectral::rho;

    #[test]
    fn path_reaches_extremal_graph() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let seq = kelmans_sequence_to_extremal(&p4).unwrap();
        assert_eq!(seq.len(), 2);
        let last = seq.last().unwrap();
        assert!(are_isomorphic(last, &g_unique_pm(4).unwrap()));
        assert!(rho(last).unwrap() > rho(&p4).unwrap() + 1e-6);
    }

    #[test]
    fn extremal_graph_is_a_fixed_point_up_to_isomorphism() {
        let g = g_unique_pm(6).unwrap();
        let r = rho(&g).unwrap();
        for h in kelmans_sequence_to_extremal(&g).unwrap() {
            assert!(are_isomorphic(&h, &g));
            assert!((rho(&h).unwrap() - r).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_graphs_without_unique_pm() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            kelmans_sequence_to_extremal(&c4),
            Err(Error::NoUniquePerfectMatching)
        );
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(kelmans_sequence_to_extremal(&two), Err(Error::Disconnected));
    }
}
