//! Backtracking over edges for spanning subgraphs with prescribed degree
//! sets. Serves as the oracle for every polynomial checker and as the
//! decision procedure for general `[a, b]` queries.

use crate::graph::{Edge, Graph};

/// Allowed degrees per vertex, as bit masks (`bit d` set iff degree `d`
/// is allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpec {
    pub allowed: Vec<u64>,
}

fn range_mask(lo: usize, hi: usize) -> u64 {
    if lo > hi || lo > 63 {
        return 0;
    }
    let hi = hi.min(63);
    let upper = if hi == 63 {
        u64::MAX
    } else {
        (1u64 << (hi + 1)) - 1
    };
    upper & !((1u64 << lo) - 1)
}

impl DegreeSpec {
    /// Every vertex in `[a, b]`.
    pub fn interval(n: usize, a: usize, b: usize) -> Self {
        DegreeSpec {
            allowed: vec![range_mask(a, b); n],
        }
    }

    /// Every vertex odd and in `[1, b]`.
    pub fn odd_upto(n: usize, b: usize) -> Self {
        let odd = 0xAAAA_AAAA_AAAA_AAAAu64;
        DegreeSpec {
            allowed: vec![range_mask(1, b) & odd; n],
        }
    }

    /// Vertex `v` has degree exactly `f[v]`.
    pub fn exact(f: &[usize]) -> Self {
        DegreeSpec {
            allowed: f.iter().map(|&d| range_mask(d, d)).collect(),
        }
    }

    /// Whether `d` is an allowed degree of `v`.
    pub fn admits(&self, v: usize, d: usize) -> bool {
        d < 64 && self.allowed[v] >> d & 1 == 1
    }

    /// Re-validates a candidate factor from scratch.
    pub fn is_satisfied_by(&self, h: &Graph) -> bool {
        (0..h.order()).all(|v| self.admits(v, h.degree(v)))
    }
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Graph),
    /// The whole space was explored without success.
    Exhausted,
    /// The node budget ran out first.
    BudgetExceeded,
}

struct State<'a> {
    spec: &'a DegreeSpec,
    edges: Vec<Edge>,
    deg: Vec<usize>,
    remaining: Vec<usize>,
    chosen: Vec<bool>,
    found: usize,
    cap: usize,
    first: Option<Vec<bool>>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    #[inline]
    fn feasible(&self, v: usize) -> bool {
        let lo = self.deg[v];
        let hi = lo + self.remaining[v];
        self.spec.allowed[v] & range_mask(lo, hi) != 0
    }

    /// Returns false when the budget is exhausted.
    fn go(&mut self, i: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if i == self.edges.len() {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.chosen.clone());
            }
            return true;
        }
        let Edge { u, v } = self.edges[i];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        // include
        self.deg[u] += 1;
        self.deg[v] += 1;
        if self.feasible(u) && self.feasible(v) {
            self.chosen[i] = true;
            if !self.go(i + 1) {
                return false;
            }
            self.chosen[i] = false;
        }
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        // exclude
        if self.found < self.cap && self.feasible(u) && self.feasible(v) && !self.go(i + 1) {
            return false;
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
        true
    }
}

fn run(g: &Graph, spec: &DegreeSpec, cap: usize, budget: u64) -> (usize, Option<Graph>, bool) {
    let n = g.order();
    assert_eq!(spec.allowed.len(), n);
    let edges = g.edges();
    let mut st = State {
        spec,
        remaining: g.degrees(),
        deg: vec![0; n],
        chosen: vec![false; edges.len()],
        edges,
        found: 0,
        cap,
        first: None,
        nodes: 0,
        budget,
    };
    if (0..n).any(|v| !st.feasible(v)) {
        return (0, None, true);
    }
    let complete = if cap == 0 { true } else { st.go(0) };
    let first = st.first.map(|chosen| {
        let mut h = Graph::empty(n).expect("order already validated");
        for (e, c) in st.edges.iter().zip(chosen) {
            if c {
                h.link(e.u, e.v);
            }
        }
        h
    });
    (st.found, first, complete)
}

/// First factor found, exploring at most `budget` search nodes.
pub fn find_factor(g: &Graph, spec: &DegreeSpec, budget: Option<u64>) -> SearchOutcome {
    let (_, first, complete) = run(g, spec, 1, budget.unwrap_or(u64::MAX));
    match first {
        Some(h) => SearchOutcome::Found(h),
        None if complete => SearchOutcome::Exhausted,
        None => SearchOutcome::BudgetExceeded,
    }
}

/// `min(#factors, cap)`.
pub fn count_factors(g: &Graph, spec: &DegreeSpec, cap: usize) -> usize {
    run(g, spec, cap, u64::MAX).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        assert_eq!(range_mask(1, 3), 0b1110);
        assert_eq!(range_mask(0, 63), u64::MAX);
        assert_eq!(range_mask(3, 2), 0);
        let s = DegreeSpec::odd_upto(1, 5);
        assert_eq!(s.allowed[0], 0b101010);
    }

    #[test]
    fn two_factors_of_k4() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_factors(&k4, &DegreeSpec::exact(&[2; 4]), 100), 3);
        assert_eq!(count_factors(&k4, &DegreeSpec::exact(&[1; 4]), 100), 3);
        assert_eq!(count_factors(&k4, &DegreeSpec::exact(&[3; 4]), 100), 1);
        assert_eq!(count_factors(&k4, &DegreeSpec::exact(&[2; 4]), 2), 2);
    }

    #[test]
    fn found_factor_satisfies_spec() {
        let k5 = Graph::complete(5).unwrap();
        let spec = DegreeSpec::interval(5, 2, 3);
        match find_factor(&k5, &spec, None) {
            SearchOutcome::Found(h) => assert!(spec.is_satisfied_by(&h)),
            other => panic!("{other:?}"),
        }
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            find_factor(&star, &DegreeSpec::interval(4, 2, 3), None),
            SearchOutcome::Exhausted
        );
    }

    #[test]
    fn budget_is_reported() {
        let k8 = Graph::complete(8).unwrap();
        // 7-regular target forces the full graph; tiny budget stops early
        let out = find_factor(&k8, &DegreeSpec::exact(&[7; 8]), Some(3));
        assert_eq!(out, SearchOutcome::BudgetExceeded);
    }
}
