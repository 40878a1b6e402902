//! Matchings, factors and their existence certificates.
//!
//! Every checker returns a [`FactorResult`]: a factor that has been
//! re-validated, a deletion set `S` violating the governing condition, or
//! (for pure searches) a non-existence verdict with an exhaustiveness flag.

mod gadget;
mod kelmans;
mod search;
mod sweep;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::{
    adjacency_lists, has_alternating_cycle, max_matching, max_matching_lists, Matching,
};

pub use gadget::{double_cover_matching, f_factor_gadget, odd_factor_gadget, GADGET_MAX_NODES};
pub use kelmans::{kelmans_sequence_to_extremal, kelmans_steps, KelmansStep};
pub use search::{count_factors, find_factor, DegreeSpec, SearchOutcome};
pub use sweep::{
    for_each_subset, sweep_witness, tutte_berge_deficiency, Condition, SWEEP_MAX_ORDER,
};

/// Up to this order a perfect-matching refutation reports the canonical
/// sweep witness instead of the Gallai–Edmonds one.
pub const CANONICAL_WITNESS_MAX_ORDER: usize = 16;

/// Bounds of an `[a, b]`-factor query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorQuery {
    pub a: usize,
    pub b: usize,
    pub odd_only: bool,
}

impl FactorQuery {
    pub fn new(a: usize, b: usize, odd_only: bool) -> Result<FactorQuery> {
        if a < 1 || a > b {
            return Err(Error::Parameter(format!(
                "need 1 <= a <= b, got a={a}, b={b}"
            )));
        }
        if odd_only && (a != 1 || b % 2 == 0) {
            return Err(Error::Parameter(format!(
                "odd factors need a = 1 and b odd, got a={a}, b={b}"
            )));
        }
        Ok(FactorQuery { a, b, odd_only })
    }

    pub fn spec(&self, n: usize) -> DegreeSpec {
        if self.odd_only {
            DegreeSpec::odd_upto(n, self.b)
        } else {
            DegreeSpec::interval(n, self.a, self.b)
        }
    }

    /// Degree (and parity) postcondition of a candidate factor.
    pub fn is_satisfied_by(&self, h: &Graph) -> bool {
        self.spec(h.order()).is_satisfied_by(h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Blossom,
    GallaiEdmonds,
    SubsetSweep,
    TutteGadget,
    OddGadget,
    DoubleCover,
    Backtracking,
    GreedyExtension,
    DegreeObstruction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Graph),
    Refuted(VertexSet),
    /// A search ended without a factor or certificate. `exhaustive` says
    /// whether the search space was fully covered.
    NotFound {
        exhaustive: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorResult {
    pub outcome: Outcome,
    pub method: Method,
}

impl FactorResult {
    fn found(h: Graph, method: Method) -> Self {
        FactorResult {
            outcome: Outcome::Found(h),
            method,
        }
    }

    fn refuted(s: VertexSet, method: Method) -> Self {
        FactorResult {
            outcome: Outcome::Refuted(s),
            method,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }

    /// True when the result proves that no factor exists.
    pub fn is_absent(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Refuted(_) | Outcome::NotFound { exhaustive: true }
        )
    }

    pub fn factor(&self) -> Option<&Graph> {
        match &self.outcome {
            Outcome::Found(h) => Some(h),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<VertexSet> {
        match self.outcome {
            Outcome::Refuted(s) => Some(s),
            _ => None,
        }
    }
}

/// Half-integral edge weights with every vertex sum at most 1.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalMatching {
    /// Positive weights only, sorted by edge.
    pub weights: Vec<(Edge, f64)>,
}

impl FractionalMatching {
    pub fn total(&self) -> f64 {
        self.weights.iter().map(|&(_, w)| w).sum()
    }

    pub fn weight(&self, e: Edge) -> f64 {
        self.weights
            .iter()
            .find(|&&(f, _)| f == e)
            .map_or(0.0, |&(_, w)| w)
    }

    /// Every weight in `[0, 1]` on an edge of `g`, vertex sums at most 1.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut load = vec![0.0f64; g.order()];
        for &(e, w) in &self.weights {
            if !(0.0..=1.0).contains(&w) || !g.has_edge(e.u, e.v) {
                return false;
            }
            load[e.u] += w;
            load[e.v] += w;
        }
        load.iter().all(|&l| l <= 1.0 + 1e-12)
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_valid_in(g) && (2.0 * self.total() - g.order() as f64).abs() < 1e-9
    }

    /// Subgraph of positively weighted edges.
    pub fn support(&self, n: usize) -> Graph {
        let mut h = Graph::empty(n).expect("order of an existing graph");
        for &(e, _) in &self.weights {
            h.link(e.u, e.v);
        }
        h
    }
}

fn matching_graph(n: usize, m: &Matching) -> Graph {
    let mut h = Graph::empty(n).expect("order of an existing graph");
    for e in &m.edges {
        h.link(e.u, e.v);
    }
    h
}

/// `A = N(D) \ D` where `D` collects the vertices missed by some maximum
/// matching. Satisfies `o(G − A) − |A| = n − 2ν(G)`.
pub fn gallai_edmonds_barrier(g: &Graph) -> VertexSet {
    let n = g.order();
    let adj = adjacency_lists(g);
    let nu = max_matching_lists(&adj)
        .iter()
        .filter(|&&m| m != usize::MAX)
        .count()
        / 2;
    let mut d = VertexSet::EMPTY;
    for v in 0..n {
        let mut without = adj.clone();
        without[v].clear();
        for w in g.neighbors(v) {
            without[w].retain(|&x| x != v);
        }
        let nu_v = max_matching_lists(&without)
            .iter()
            .filter(|&&m| m != usize::MAX)
            .count()
            / 2;
        if nu_v == nu {
            d.insert(v);
        }
    }
    let mut a = VertexSet::EMPTY;
    for v in d {
        a = a.union(g.neighbors(v));
    }
    a.difference(d)
}

/// Perfect matching, or a Tutte set `S` with `o(G − S) > |S|`.
pub fn perfect_matching(g: &Graph) -> FactorResult {
    let m = max_matching(g);
    if m.is_perfect(g.order()) {
        return FactorResult::found(matching_graph(g.order(), &m), Method::Blossom);
    }
    if g.order() <= CANONICAL_WITNESS_MAX_ORDER {
        if let Ok(Some(s)) = sweep_witness(g, Condition::Tutte) {
            return FactorResult::refuted(s, Method::SubsetSweep);
        }
    }
    let s = gallai_edmonds_barrier(g);
    assert!(
        Condition::Tutte.is_violated_by(g, s),
        "barrier must certify a deficient graph"
    );
    FactorResult::refuted(s, Method::GallaiEdmonds)
}

/// True iff `g` has exactly one perfect matching.
pub fn is_unique_pm(g: &Graph) -> bool {
    let m = max_matching(g);
    m.is_perfect(g.order()) && !has_alternating_cycle(g, &m)
}

/// Spanning subgraph with `d_H(v) = f(v)` for every `v`.
pub fn f_factor(g: &Graph, f: &[usize]) -> Result<FactorResult> {
    if f.len() != g.order() {
        return Err(Error::Parameter(format!(
            "f has {} entries for {} vertices",
            f.len(),
            g.order()
        )));
    }
    if let Some(v) = (0..g.order()).find(|&v| f[v] > g.degree(v)) {
        return Ok(FactorResult::refuted(
            VertexSet::singleton(v),
            Method::DegreeObstruction,
        ));
    }
    Ok(match f_factor_gadget(g, f)? {
        Some(h) => {
            assert!(DegreeSpec::exact(f).is_satisfied_by(&h));
            FactorResult::found(h, Method::TutteGadget)
        }
        None => FactorResult {
            outcome: Outcome::NotFound { exhaustive: true },
            method: Method::TutteGadget,
        },
    })
}

/// Searches exhaustively; used where the polynomial path is unavailable.
fn backtrack(g: &Graph, spec: &DegreeSpec) -> FactorResult {
    match find_factor(g, spec, None) {
        SearchOutcome::Found(h) => FactorResult::found(h, Method::Backtracking),
        SearchOutcome::Exhausted | SearchOutcome::BudgetExceeded => FactorResult {
            outcome: Outcome::NotFound { exhaustive: true },
            method: Method::Backtracking,
        },
    }
}

fn check_sweep_order(g: &Graph) -> Result<()> {
    if g.order() > SWEEP_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "factor decision limited to {SWEEP_MAX_ORDER} vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Odd `[1, b]`-factor (`b` odd), or the first `S` with `o(G − S) > b|S|`.
///
/// A perfect matching or the parity gadget supplies the factor when one
/// exists; the sweep supplies the witness otherwise.
pub fn odd_1b_factor(g: &Graph, b: usize) -> Result<FactorResult> {
    if b % 2 == 0 {
        return Err(Error::Parameter(format!("b must be odd, got {b}")));
    }
    check_sweep_order(g)?;
    let spec = DegreeSpec::odd_upto(g.order(), b);
    let m = max_matching(g);
    if m.is_perfect(g.order()) {
        return Ok(FactorResult::found(
            matching_graph(g.order(), &m),
            Method::Blossom,
        ));
    }
    let fast = match odd_factor_gadget(g, b) {
        Ok(Some(h)) => return Ok(FactorResult::found(h, Method::OddGadget)),
        Ok(None) => true,
        Err(_) => false,
    };
    if let Some(s) = sweep_witness(g, Condition::Amahashi { b })? {
        return Ok(FactorResult::refuted(s, Method::SubsetSweep));
    }
    assert!(!fast, "parity gadget and subset sweep disagree");
    let r = backtrack(g, &spec);
    assert!(r.is_found(), "no factor and no violating set");
    Ok(r)
}

/// Odd `[1, b]`-factor decided purely by the subset sweep; the factor, if
/// any, comes from backtracking.
pub fn odd_1b_factor_by_sweep(g: &Graph, b: usize) -> Result<FactorResult> {
    if b % 2 == 0 {
        return Err(Error::Parameter(format!("b must be odd, got {b}")));
    }
    if let Some(s) = sweep_witness(g, Condition::Amahashi { b })? {
        return Ok(FactorResult::refuted(s, Method::SubsetSweep));
    }
    Ok(backtrack(g, &DegreeSpec::odd_upto(g.order(), b)))
}

/// Extends a maximum matching: every exposed vertex is attached to a
/// matched neighbour whose degree is still below `b`.
fn greedy_one_b(g: &Graph, b: usize) -> Option<Graph> {
    let n = g.order();
    let m = max_matching(g);
    let mut h = matching_graph(n, &m);
    for v in 0..n {
        if h.degree(v) > 0 {
            continue;
        }
        let w = g
            .neighbors(v)
            .iter()
            .find(|&w| h.degree(w) > 0 && h.degree(w) < b)?;
        h.link(v, w);
    }
    Some(h)
}

/// `[1, b]`-factor (`b >= 2`), or the first `S` with `i(G − S) > b|S|`.
pub fn one_b_factor_exists(g: &Graph, b: usize) -> Result<FactorResult> {
    if b < 2 {
        return Err(Error::Parameter(format!("b must be at least 2, got {b}")));
    }
    check_sweep_order(g)?;
    let spec = DegreeSpec::interval(g.order(), 1, b);
    if let Some(h) = greedy_one_b(g, b) {
        if spec.is_satisfied_by(&h) {
            return Ok(FactorResult::found(h, Method::GreedyExtension));
        }
    }
    if let Some(s) = sweep_witness(g, Condition::Isolated { b })? {
        return Ok(FactorResult::refuted(s, Method::SubsetSweep));
    }
    let r = backtrack(g, &spec);
    assert!(r.is_found(), "no factor and no violating set");
    Ok(r)
}

/// `[a, b]`-factor, dispatched by the shape of the query.
pub fn ab_factor(g: &Graph, q: FactorQuery) -> Result<FactorResult> {
    if q.odd_only {
        return odd_1b_factor(g, q.b);
    }
    if q.a == q.b {
        return f_factor(g, &vec![q.a; g.order()]);
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) < q.a) {
        return Ok(FactorResult::refuted(
            VertexSet::singleton(v),
            Method::DegreeObstruction,
        ));
    }
    if q.a == 1 && g.order() <= SWEEP_MAX_ORDER {
        return one_b_factor_exists(g, q.b);
    }
    Ok(backtrack(g, &q.spec(g.order())))
}

/// Result of [`fractional_pm`].
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalResult {
    pub result: FactorResult,
    pub matching: Option<FractionalMatching>,
}

/// Fractional perfect matching from the bipartite double cover, or the first
/// `S` with `i(G − S) > |S|`.
pub fn fractional_pm(g: &Graph) -> FractionalResult {
    let n = g.order();
    let right = double_cover_matching(g);
    if right.iter().all(Option::is_some) {
        let mut weights: Vec<(Edge, f64)> = Vec::new();
        for (w, u) in right.iter().enumerate() {
            let e = Edge::new(u.expect("perfect"), w);
            match weights.iter_mut().find(|(f, _)| *f == e) {
                Some((_, x)) => *x += 0.5,
                None => weights.push((e, 0.5)),
            }
        }
        weights.sort_by(|a, b| a.0.cmp(&b.0));
        let fm = FractionalMatching { weights };
        return FractionalResult {
            result: FactorResult::found(fm.support(n), Method::DoubleCover),
            matching: Some(fm),
        };
    }
    let result = match sweep_witness(g, Condition::Isolated { b: 1 }) {
        Ok(Some(s)) => FactorResult::refuted(s, Method::SubsetSweep),
        _ => FactorResult {
            outcome: Outcome::NotFound { exhaustive: true },
            method: Method::DoubleCover,
        },
    };
    FractionalResult {
        result,
        matching: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{g_unique_pm, hub_clique_graph, hub_of, t_graph};
    use crate::matching::count_perfect_matchings;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn query_validation() {
        assert!(FactorQuery::new(0, 2, false).is_err());
        assert!(FactorQuery::new(3, 2, false).is_err());
        assert!(FactorQuery::new(1, 2, true).is_err());
        assert!(FactorQuery::new(2, 3, true).is_err());
        assert!(FactorQuery::new(1, 3, true).is_ok());
    }

    #[test]
    fn perfect_matchings() {
        assert!(perfect_matching(&Graph::complete(4).unwrap()).is_found());
        let r = perfect_matching(&star(3));
        assert_eq!(r.witness().unwrap().to_vec(), vec![0]);
        assert_eq!(star(3).odd_components(VertexSet::singleton(0)), 3);
        let g = g_unique_pm(8).unwrap();
        let h = perfect_matching(&g).factor().unwrap().clone();
        let expected: Vec<Edge> = (0..4).map(|i| Edge::new(i, 4 + i)).collect();
        assert_eq!(h.edges(), expected);
    }

    #[test]
    fn barrier_certifies_large_graphs() {
        let g = t_graph(20, 1, 2).unwrap();
        let s = gallai_edmonds_barrier(&g);
        assert!(Condition::Tutte.is_violated_by(&g, s));
        assert_eq!(s, hub_of(2));
    }

    #[test]
    fn unique_pm() {
        assert!(!is_unique_pm(&cycle(4)));
        assert!(is_unique_pm(
            &Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
        ));
        let g = g_unique_pm(6).unwrap();
        assert!(is_unique_pm(&g));
        assert_eq!(count_perfect_matchings(&g, 2), 1);
    }

    #[test]
    fn f_factors() {
        let c5 = cycle(5);
        assert_eq!(f_factor(&c5, &[2; 5]).unwrap().factor(), Some(&c5));
        let k4 = Graph::complete(4).unwrap();
        assert!(f_factor(&k4, &[1; 4]).unwrap().is_found());
        let h = f_factor(&k4, &[2; 4]).unwrap().factor().unwrap().clone();
        assert_eq!(h.size(), 4);
        assert!(h.is_connected());
        assert_eq!(count_factors(&k4, &DegreeSpec::exact(&[2; 4]), 10), 3);
        let r = f_factor(&star(3), &[3, 2, 1, 1]).unwrap();
        assert!(f_factor(&star(3), &[2, 1, 1, 1]).unwrap().is_absent());
        assert_eq!(r.witness(), Some(VertexSet::singleton(1)));
        assert!(f_factor(&c5, &[2; 4]).is_err());
    }

    #[test]
    fn odd_factors() {
        assert_eq!(odd_1b_factor(&star(3), 3).unwrap().factor(), Some(&star(3)));
        // odd order: the empty set already violates and is reported first
        let r = odd_1b_factor(&star(4), 3).unwrap();
        assert_eq!(r.witness(), Some(VertexSet::EMPTY));
        assert!(Condition::Amahashi { b: 3 }.is_violated_by(&star(4), VertexSet::singleton(0)));
        assert_eq!(star(4).odd_components(VertexSet::singleton(0)), 4);
        let g = t_graph(12, 3, 1).unwrap();
        let r = odd_1b_factor(&g, 3).unwrap();
        let s = r.witness().unwrap();
        assert_eq!(s, hub_of(1));
        assert!(g.odd_components(s) >= 3 * s.len() + 2);
        assert!(odd_1b_factor(&star(3), 2).is_err());
        assert!(matches!(
            odd_1b_factor(&Graph::complete(25).unwrap(), 1),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn one_b_factors() {
        let r = one_b_factor_exists(&star(4), 2).unwrap();
        assert_eq!(r.witness(), Some(VertexSet::singleton(0)));
        assert_eq!(star(4).isolated_vertices(VertexSet::singleton(0)), 4);
        assert_eq!(
            one_b_factor_exists(&star(4), 4).unwrap().factor(),
            Some(&star(4))
        );
        assert!(one_b_factor_exists(&cycle(7), 2).unwrap().is_found());
        let g = hub_clique_graph(16, 2, 1).unwrap();
        let s = one_b_factor_exists(&g, 2).unwrap().witness().unwrap();
        assert_eq!(g.isolated_vertices(s), 3);
    }

    #[test]
    fn ab_dispatch() {
        let c6 = cycle(6);
        let q = FactorQuery::new(2, 2, false).unwrap();
        assert_eq!(ab_factor(&c6, q).unwrap().factor(), Some(&c6));
        let q = FactorQuery::new(2, 3, false).unwrap();
        let k5 = Graph::complete(5).unwrap();
        let r = ab_factor(&k5, q).unwrap();
        assert!(q.is_satisfied_by(r.factor().unwrap()));
        let r = ab_factor(&star(3), q).unwrap();
        assert!(r.is_absent());
        assert_eq!(r.method, Method::DegreeObstruction);
    }

    #[test]
    fn fractional() {
        let r = fractional_pm(&cycle(5));
        let fm = r.matching.unwrap();
        assert!(fm.is_perfect_in(&cycle(5)));
        assert!(fm.weights.iter().all(|&(_, w)| w == 0.5));
        let r = fractional_pm(&star(3));
        assert_eq!(r.result.witness(), Some(VertexSet::singleton(0)));
        let k4 = Graph::complete(4).unwrap();
        let fm = fractional_pm(&k4).matching.unwrap();
        assert!(fm.is_perfect_in(&k4));
        let g = hub_clique_graph(12, 1, 1).unwrap();
        let s = fractional_pm(&g).result.witness().unwrap();
        assert_eq!((s, g.isolated_vertices(s)), (hub_of(1), 2));
    }
}
