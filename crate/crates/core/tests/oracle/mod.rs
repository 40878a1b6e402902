//! Brute-force reference implementations, independent of the library's
//! algorithms. Only the `Graph` accessors are shared.

#![allow(dead_code)]

use spectral_factors::Graph;

pub fn rows(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).bits()).collect()
}

/// Largest adjacency eigenvalue by cyclic Jacobi rotations.
pub fn jacobi_rho(g: &Graph) -> f64 {
    let n = g.order();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as u8 as f64).collect())
        .collect();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// Number of perfect matchings, stopping once `cap` is reached.
pub fn pm_count(g: &Graph, cap: usize) -> usize {
    fn go(rows: &[u64], left: u64, cap: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let v = left.trailing_zeros() as usize;
        let mut cand = rows[v] & left & !(1 << v);
        let mut total = 0;
        while cand != 0 && total < cap {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            total += go(rows, left & !(1 << v) & !(1 << w), cap - total);
        }
        total
    }
    let n = g.order();
    if n % 2 == 1 {
        return 0;
    }
    go(&rows(g), low_mask(n), cap)
}

pub fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Matching number by memoized recursion over vertex subsets (`n <= 16`).
pub fn matching_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let r = rows(g);
    let mut memo = vec![u8::MAX; 1 << n];
    fn go(r: &[u64], left: usize, memo: &mut [u8]) -> u8 {
        if left == 0 {
            return 0;
        }
        if memo[left] != u8::MAX {
            return memo[left];
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut best = go(r, rest, memo);
        let mut cand = r[v] as usize & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + go(r, rest & !(1 << w), memo));
        }
        memo[left] = best;
        best
    }
    go(&r, (1 << n) - 1, &mut memo) as usize
}

/// Sizes of the components of `G − removed`.
pub fn component_sizes(rows: &[u64], n: usize, removed: u64) -> Vec<usize> {
    let mut left = low_mask(n) & !removed;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = rows[v] & left & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        out.push(comp.count_ones() as usize);
    }
    out
}

/// `max_S (o(G − S) − |S|)` over every vertex subset.
pub fn tutte_berge_max(g: &Graph) -> usize {
    let n = g.order();
    let r = rows(g);
    let mut best = 0i64;
    for s in 0..1u64 << n {
        let odd = component_sizes(&r, n, s)
            .iter()
            .filter(|&&c| c % 2 == 1)
            .count() as i64;
        best = best.max(odd - s.count_ones() as i64);
    }
    best as usize
}

/// Whether `i(G − S) <= |S|` for every `S`.
pub fn isolated_condition(g: &Graph) -> bool {
    let n = g.order();
    let r = rows(g);
    (0..1u64 << n).all(|s| {
        let iso = component_sizes(&r, n, s)
            .iter()
            .filter(|&&c| c == 1)
            .count();
        iso <= s.count_ones() as usize
    })
}

/// Isomorphism by trying every bijection, pruned by degree.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used >> w & 1 == 1 || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                if extend(g, h, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new(), 0)
}

/// Number of spanning subgraphs whose degree at `v` lies in `allowed[v]`
/// (bit `d` set when degree `d` is allowed), capped.
pub fn count_degree_subgraphs(g: &Graph, allowed: &[u64], cap: usize) -> usize {
    let edges = g.edges();
    let n = g.order();
    let mut remaining = vec![0usize; n];
    for e in &edges {
        remaining[e.u] += 1;
        remaining[e.v] += 1;
    }
    fn go(
        i: usize,
        edges: &[spectral_factors::Edge],
        deg: &mut [usize],
        remaining: &mut [usize],
        allowed: &[u64],
        cap: usize,
    ) -> usize {
        if i == edges.len() {
            return (0..deg.len()).all(|v| allowed[v] >> deg[v] & 1 == 1) as usize;
        }
        let (u, v) = (edges[i].u, edges[i].v);
        remaining[u] -= 1;
        remaining[v] -= 1;
        let mut total = 0;
        for take in [false, true] {
            if total >= cap {
                break;
            }
            if take {
                deg[u] += 1;
                deg[v] += 1;
            }
            // vertices whose last edge was just decided must be satisfied
            let ok = [u, v]
                .iter()
                .all(|&x| remaining[x] > 0 || allowed[x] >> deg[x] & 1 == 1)
                && [u, v].iter().all(|&x| {
                    (deg[x]..=deg[x] + remaining[x]).any(|d| d < 64 && allowed[x] >> d & 1 == 1)
                });
            if ok {
                total += go(i + 1, edges, deg, remaining, allowed, cap - total);
            }
            if take {
                deg[u] -= 1;
                deg[v] -= 1;
            }
        }
        remaining[u] += 1;
        remaining[v] += 1;
        total
    }
    if edges.is_empty() {
        return (0..n).all(|v| allowed[v] & 1 == 1) as usize;
    }
    go(0, &edges, &mut vec![0; n], &mut remaining, allowed, cap)
}

/// Bit mask of degrees `lo..=hi`, optionally odd only.
pub fn degree_mask(lo: usize, hi: usize, odd_only: bool) -> u64 {
    (lo..=hi.min(63))
        .filter(|d| !odd_only || d % 2 == 1)
        .fold(0, |m, d| m | 1 << d)
}

/// graph6 encoder written from the format description.
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    for chunk in bits.chunks(6) {
        out.push(chunk.iter().fold(0, |acc, &b| acc << 1 | b) + 63);
    }
    out
}

/// Small deterministic generator (SplitMix64) for test inputs.
pub struct Mix(pub u64);

impl Mix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    /// `G(n, p)` with `p = num / 64`.
    pub fn graph(&mut self, n: usize, num: u64) -> Graph {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if self.below(64) < num {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }
}
