//! Extremal graph families.
//!
//! Vertex layouts are fixed so that witnesses and factors are easy to read:
//! every join lists its left operand first.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn k(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

fn e(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// `H_{n,a} = K_{a−1} ∇ (K_1 ∪ K_{n−a})`.
///
/// Layout: `0..a−1` the hub clique, `a−1` the low-degree vertex, then the
/// large clique.
pub fn h_na(n: usize, a: usize) -> Result<Graph> {
    if a < 1 || a + 1 > n {
        return Err(Error::Parameter(format!(
            "H_(n,a) needs 1 <= a <= n-1, got n={n}, a={a}"
        )));
    }
    k(a - 1)?.join(&k(1)?.union(&k(n - a)?)?)
}

/// `K_δ ∇ (K_{n−(b+1)δ−1} ∪ (bδ+1)K_1)` for any `b >= 1`.
///
/// Layout: hub `0..δ`, then the large clique, then the `bδ+1` independent
/// vertices.
pub fn hub_clique_graph(n: usize, b: usize, delta: usize) -> Result<Graph> {
    if b < 1 || delta < 1 {
        return Err(Error::Parameter(format!(
            "need b >= 1 and delta >= 1, got b={b}, delta={delta}"
        )));
    }
    let min = (b + 1) * delta + 2;
    if n < min {
        return Err(Error::Parameter(format!(
            "need n >= (b+1)*delta + 2 = {min}, got n={n}"
        )));
    }
    let clique = n - (b + 1) * delta - 1;
    k(delta)?.join(&k(clique)?.union(&e(b * delta + 1)?)?)
}

/// `T(n, b, δ)` with `b` odd.
pub fn t_graph(n: usize, b: usize, delta: usize) -> Result<Graph> {
    if b % 2 == 0 {
        return Err(Error::Parameter(format!("b must be odd, got {b}")));
    }
    hub_clique_graph(n, b, delta)
}

/// The hub `K_δ` of [`hub_clique_graph`] / [`t_graph`].
pub fn hub_of(delta: usize) -> VertexSet {
    VertexSet::range(0, delta)
}

/// `K_t ∇ (2K_1 ∪ K_{n−t−2})`: the two independent vertices are `t` and
/// `t+1`.
pub fn two_pendant_join(n: usize, t: usize) -> Result<Graph> {
    if n < t + 2 {
        return Err(Error::Parameter(format!("need n >= t+2, got n={n}, t={t}")));
    }
    k(t)?.join(&e(2)?.union(&k(n - t - 2)?)?)
}

/// `K_s ∇ (K_{n_1} ∪ ... ∪ K_{n_t})`.
pub fn clique_join_cliques(s: usize, parts: &[usize]) -> Result<Graph> {
    let mut rest = e(0)?;
    for &p in parts {
        rest = rest.union(&k(p)?)?;
    }
    k(s)?.join(&rest)
}

/// `G(2n, 1)`: `u_i` (vertex `i−1`) independent, `w_i` (vertex `n+i−1`)
/// a clique, and `N(u_i) = {w_1, ..., w_i}`. The unique perfect matching is
/// `{u_i w_i}`.
pub fn g_unique_pm(two_n: usize) -> Result<Graph> {
    if two_n % 2 != 0 || two_n < 2 {
        return Err(Error::Parameter(format!(
            "order must be even and at least 2, got {two_n}"
        )));
    }
    let n = two_n / 2;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..i {
            edges.push((n + j, n + i));
        }
        for j in 0..=i {
            edges.push((i, n + j));
        }
    }
    Graph::from_edges(two_n, edges)
}

/// The `(k−t)`-regular bipartite bridge between `kK_1` and `K_k` inside
/// `H_2`: singleton `i` is joined to clique vertices `i, i+1, ..., i+k−t−1`
/// (mod `k`).
fn circulant_bridge(k: usize, degree: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..k {
        for d in 0..degree {
            out.push((i, (i + d) % k));
        }
    }
    out
}

/// `G(2n, k)` for `k <= n`, assembled as: `F_1` on `2(k+t)` vertices (where
/// `n = sk + t`), followed by `s−1` copies of `K_k ∇ kK_1`, with each
/// `W_i` joined to every later block.
///
/// Layout of `F_1`: `A_11` (t singletons), `A_12` (`K_t`), `A_21`
/// (k singletons), `A_22` (`K_k`). Each later block lists `U_i` then `W_i`.
pub fn g_unique_kfactor(two_n: usize, kdeg: usize) -> Result<Graph> {
    if two_n % 2 != 0 || two_n < 2 {
        return Err(Error::Parameter(format!(
            "order must be even and at least 2, got {two_n}"
        )));
    }
    let n = two_n / 2;
    if kdeg < 1 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if kdeg > n {
        return Err(Error::Parameter(format!(
            "k={kdeg} exceeds n={n}; use the K_(2n-k) join H candidates instead"
        )));
    }
    if two_n > crate::graph::MAX_ORDER {
        return Err(Error::Capacity(format!("order {two_n} exceeds 64")));
    }
    let s = n / kdeg;
    let t = n % kdeg;
    let a11 = 0;
    let a12 = t;
    let a21 = 2 * t;
    let a22 = 2 * t + kdeg;
    let f1_end = 2 * (kdeg + t);

    let mut edges = Vec::new();
    // H_1 = K_t ∇ tK_1
    for i in 0..t {
        for j in 0..i {
            edges.push((a12 + j, a12 + i));
        }
        for j in 0..t {
            edges.push((a11 + i, a12 + j));
        }
    }
    // H_2: K_k plus the bridge from kK_1
    for i in 0..kdeg {
        for j in 0..i {
            edges.push((a22 + j, a22 + i));
        }
    }
    for (i, j) in circulant_bridge(kdeg, kdeg - t) {
        edges.push((a21 + i, a22 + j));
    }
    // A_11–A_22, A_12–A_21, A_12–A_22 complete
    for i in 0..t {
        for j in 0..kdeg {
            edges.push((a11 + i, a22 + j));
            edges.push((a12 + i, a21 + j));
            edges.push((a12 + i, a22 + j));
        }
    }
    // blocks: (start, W vertices)
    let mut blocks: Vec<(usize, usize, VertexSet)> = vec![(
        0,
        f1_end,
        VertexSet::range(a12, a21).union(VertexSet::range(a22, f1_end)),
    )];
    for b in 1..s {
        let start = f1_end + (b - 1) * 2 * kdeg;
        let u = start;
        let w = start + kdeg;
        for i in 0..kdeg {
            for j in 0..i {
                edges.push((w + j, w + i));
            }
            for j in 0..kdeg {
                edges.push((u + i, w + j));
            }
        }
        blocks.push((start, start + 2 * kdeg, VertexSet::range(w, w + kdeg)));
    }
    for (i, &(_, _, wi)) in blocks.iter().enumerate() {
        for &(start, end, _) in &blocks[i + 1..] {
            for x in wi {
                for y in start..end {
                    edges.push((x, y));
                }
            }
        }
    }
    Graph::from_edges(two_n, edges)
}

/// Circulant graph: `i ~ i ± d (mod n)` for each offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &d in offsets {
        if d == 0 || 2 * d > n {
            return Err(Error::Parameter(format!(
                "circulant offset {d} outside 1..={}",
                n / 2
            )));
        }
        for i in 0..n {
            g.link(i, (i + d) % n);
        }
    }
    Ok(g)
}

/// `F(b, δ) = max{4(b+1)δ + 4, bδ³ + δ}`.
pub fn odd_factor_order_bound(b: usize, delta: usize) -> usize {
    (4 * (b + 1) * delta + 4).max(b * delta.pow(3) + delta)
}
