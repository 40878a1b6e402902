//! Subset sweeps over deletion sets `S`: Tutte, Amahashi and isolated-vertex
//! conditions, and the Tutte–Berge deficiency.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the sweeps.
pub const SWEEP_MAX_ORDER: usize = 24;

/// Deletion-set condition `count(G − S) <= multiplier · |S|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `o(G − S) <= |S|` (perfect matching).
    Tutte,
    /// `o(G − S) <= b|S|` (odd `[1, b]`-factor, `b` odd).
    Amahashi { b: usize },
    /// `i(G − S) <= b|S|` (`[1, b]`-factor for `b >= 2`; fractional perfect
    /// matching for `b = 1`).
    Isolated { b: usize },
}

impl Condition {
    pub fn multiplier(self) -> usize {
        match self {
            Condition::Tutte => 1,
            Condition::Amahashi { b } | Condition::Isolated { b } => b,
        }
    }

    /// The counted quantity: `o(G − S)` or `i(G − S)`.
    pub fn count(self, g: &Graph, s: VertexSet) -> usize {
        match self {
            Condition::Tutte | Condition::Amahashi { .. } => g.odd_components(s),
            Condition::Isolated { .. } => g.isolated_vertices(s),
        }
    }

    /// Whether `s` violates the condition, evaluated from scratch.
    pub fn is_violated_by(self, g: &Graph, s: VertexSet) -> bool {
        s.is_subset(g.vertices()) && self.count(g, s) > self.multiplier() * s.len()
    }

    /// Largest `|S|` that can possibly violate: the count never exceeds
    /// `n − |S|`.
    fn max_size(self, n: usize) -> usize {
        let m = self.multiplier();
        // need m·s < n − s
        if n == 0 {
            0
        } else {
            (n - 1) / (m + 1)
        }
    }
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order of the
/// sorted vertex lists; stops as soon as `visit` returns true.
pub fn for_each_subset<F>(n: usize, k: usize, mut visit: F) -> bool
where
    F: FnMut(VertexSet) -> bool,
{
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let s: VertexSet = idx.iter().copied().collect();
        if visit(s) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > SWEEP_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "subset sweep limited to {SWEEP_MAX_ORDER} vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// First violating `S`: smallest `|S|`, then lexicographically smallest.
pub fn sweep_witness(g: &Graph, cond: Condition) -> Result<Option<VertexSet>> {
    check_order(g)?;
    let n = g.order();
    for k in 0..=cond.max_size(n) {
        let mut found = None;
        if for_each_subset(n, k, |s| {
            if cond.is_violated_by(g, s) {
                found = Some(s);
                true
            } else {
                false
            }
        }) {
            return Ok(found);
        }
    }
    Ok(None)
}

/// `max_S (o(G − S) − |S|)` over all `S` (including `∅`).
pub fn tutte_berge_deficiency(g: &Graph) -> Result<usize> {
    check_order(g)?;
    let n = g.order();
    let mut best = 0usize;
    for k in 0..=n {
        // o(G − S) − |S| <= n − 2|S|
        if n < 2 * k || n - 2 * k <= best {
            break;
        }
        for_each_subset(n, k, |s| {
            let o = g.odd_components(s);
            if o > k {
                best = best.max(o - k);
            }
            false
        });
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut count = 0;
        for_each_subset(5, 0, |s| {
            assert!(s.is_empty());
            count += 1;
            false
        });
        assert_eq!(count, 1);
        assert!(!for_each_subset(2, 3, |_| true));
    }

    #[test]
    fn star_witnesses() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = sweep_witness(&star, Condition::Tutte).unwrap().unwrap();
        assert_eq!(s.to_vec(), vec![0]);
        assert_eq!(star.odd_components(s), 3);
        assert_eq!(
            sweep_witness(&star, Condition::Amahashi { b: 3 }).unwrap(),
            None
        );
        let s = sweep_witness(&star, Condition::Isolated { b: 1 })
            .unwrap()
            .unwrap();
        assert_eq!(s.to_vec(), vec![0]);
    }

    #[test]
    fn deficiency_of_small_graphs() {
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(tutte_berge_deficiency(&star).unwrap(), 3);
        assert_eq!(
            tutte_berge_deficiency(&Graph::complete(5).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            tutte_berge_deficiency(&Graph::empty(3).unwrap()).unwrap(),
            3
        );
        assert!(tutte_berge_deficiency(&Graph::empty(25).unwrap()).is_err());
    }
}
