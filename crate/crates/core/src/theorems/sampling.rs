//! Seeded random graphs for the sampled verifiers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// `G(n, p)` with `p` drawn uniformly from `[p_min, p_max]` per sample.
    UniformEdgeProb { p_min: f64, p_max: f64 },
    /// Up to `max_edits` edge toggles applied to the theorem's extremal
    /// graph, each keeping the graph connected with minimum degree at least
    /// the theorem's `δ`.
    NearExtremal { max_edits: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Sampler {
    pub seed: u64,
    pub count: u64,
    pub strategy: Strategy,
}

/// Attempts per edit before the edit is dropped.
const EDIT_ATTEMPTS: usize = 64;

impl Sampler {
    pub fn uniform(seed: u64, count: u64, p_min: f64, p_max: f64) -> Sampler {
        Sampler {
            seed,
            count,
            strategy: Strategy::UniformEdgeProb { p_min, p_max },
        }
    }

    pub fn near_extremal(seed: u64, count: u64, max_edits: usize) -> Sampler {
        Sampler {
            seed,
            count,
            strategy: Strategy::NearExtremal { max_edits },
        }
    }

    /// Sample `index`; depends only on the seed and the index.
    pub fn sample(&self, index: u64, extremal: &Graph, min_degree: usize) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let n = extremal.order();
        match self.strategy {
            Strategy::UniformEdgeProb { p_min, p_max } => {
                let p = if p_max > p_min {
                    rng.gen_range(p_min..=p_max)
                } else {
                    p_min
                };
                let mut g = Graph::empty(n).expect("order of the extremal graph");
                for v in 1..n {
                    for u in 0..v {
                        if rng.gen_bool(p.clamp(0.0, 1.0)) {
                            g.link(u, v);
                        }
                    }
                }
                g
            }
            Strategy::NearExtremal { max_edits } => {
                let mut g = extremal.clone();
                let edits = if max_edits == 0 {
                    0
                } else {
                    rng.gen_range(1..=max_edits)
                };
                for _ in 0..edits {
                    for _ in 0..EDIT_ATTEMPTS {
                        let u = rng.gen_range(0..n);
                        let v = rng.gen_range(0..n);
                        if u == v {
                            continue;
                        }
                        let h = if g.has_edge(u, v) {
                            g.without_edge(u, v)
                        } else {
                            g.with_edge(u, v)
                        };
                        if h.is_connected() && h.min_degree() >= min_degree {
                            g = h;
                            break;
                        }
                    }
                }
                g
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::t_graph;

    #[test]
    fn samples_are_reproducible() {
        let t = t_graph(20, 1, 2).unwrap();
        let s = Sampler::uniform(7, 10, 0.5, 1.0);
        assert_eq!(s.sample(3, &t, 2), s.sample(3, &t, 2));
        assert_ne!(s.sample(3, &t, 2), s.sample(4, &t, 2));
        let s = Sampler::near_extremal(7, 10, 3);
        for i in 0..20 {
            let g = s.sample(i, &t, 2);
            assert!(g.is_connected() && g.min_degree() >= 2);
            let diff = g.edges().iter().filter(|e| !t.has_edge(e.u, e.v)).count()
                + t.edges().iter().filter(|e| !g.has_edge(e.u, e.v)).count();
            assert!(diff <= 3);
        }
    }
}
