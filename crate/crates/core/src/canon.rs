//! Canonical forms and isomorphism tests for small graphs.
//!
//! The canonical code of a graph on `n <= 10` vertices is the graph6
//! encoding of the relabelling whose column-ordered adjacency bit string is
//! lexicographically smallest among all orderings that list colour classes
//! of the stable (degree-refined) colouring in a fixed, isomorphism-invariant
//! order. Because the colouring is invariant, two graphs get the same code
//! iff they are isomorphic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;

/// Largest order accepted by [`canonical_code`].
pub const CANON_MAX_ORDER: usize = 10;

/// Stable colouring obtained by iterated degree refinement.
///
/// Colours are ranks of refinement signatures, so they are comparable across
/// graphs refined together by [`refine_colors`] on the same vertex list.
pub fn stable_coloring(g: &Graph) -> Vec<u32> {
    let lists: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    refine_colors(&lists, vec![0; g.order()])
}

/// Colour refinement on an adjacency-list graph starting from `colors`.
pub(crate) fn refine_colors(adj: &[Vec<usize>], mut colors: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = adj[v].iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i as u32;
        }
        let next: Vec<u32> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cells: Vec<VertexSet>,
    /// position -> cell index
    cell_of_pos: Vec<usize>,
    order: Vec<usize>,
    /// column bits of the current partial ordering, one word per column
    current: Vec<u64>,
    best: Vec<u64>,
    best_order: Vec<usize>,
    have_best: bool,
}

impl Search<'_> {
    /// `tight` is true while the current prefix equals the best prefix.
    fn extend(&mut self, depth: usize, used: u64, tight: bool) {
        if depth == self.n {
            if !self.have_best || self.current < self.best {
                self.best.clone_from(&self.current);
                self.best_order.clone_from(&self.order);
                self.have_best = true;
            }
            return;
        }
        let cell = self.cells[self.cell_of_pos[depth]];
        for v in cell.iter().filter(|&v| used >> v & 1 == 0) {
            // column `depth`: bit i set iff order[i] ~ v, read top to bottom
            let mut col = 0u64;
            for (i, &w) in self.order.iter().enumerate() {
                if self.g.has_edge(w, v) {
                    col |= 1 << (depth - 1 - i);
                }
            }
            let mut next_tight = false;
            if self.have_best && tight {
                // MSB-first column word compares like the bit string
                match col.cmp(&self.best[depth]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => next_tight = true,
                    std::cmp::Ordering::Less => {}
                }
            }
            self.current[depth] = col;
            self.order.push(v);
            self.extend(depth + 1, used | 1 << v, next_tight || !self.have_best);
            self.order.pop();
        }
    }
}

/// Canonical labelling: `perm[v]` is the new label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "canonical code limited to order {CANON_MAX_ORDER}, got {n}"
        )));
    }
    let colors = stable_coloring(g);
    let ncolors = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut cells = vec![VertexSet::EMPTY; ncolors];
    for (v, &c) in colors.iter().enumerate() {
        cells[c as usize].insert(v);
    }
    let mut cell_of_pos = Vec::with_capacity(n);
    for (i, c) in cells.iter().enumerate() {
        cell_of_pos.extend(std::iter::repeat(i).take(c.len()));
    }
    let mut s = Search {
        g,
        n,
        cells,
        cell_of_pos,
        order: Vec::with_capacity(n),
        current: vec![0; n],
        best: vec![0; n],
        best_order: Vec::new(),
        have_best: false,
    };
    s.extend(0, 0, true);
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Isomorphism-invariant code: identical iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let perm = canonical_labeling(g)?;
    Ok(write_graph6(&g.permute(&perm)))
}

/// Canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let perm = canonical_labeling(g)?;
    Ok(g.permute(&perm))
}

/// Isomorphism test for any order up to 64: joint colour refinement
/// followed by a colour-respecting backtracking search for a bijection.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
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
    // refine the disjoint union so colours are comparable
    let mut lists: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    lists.extend((0..n).map(|v| h.neighbors(v).iter().map(|w| w + n).collect()));
    let colors = refine_colors(&lists, vec![0; 2 * n]);
    let (cg, ch) = colors.split_at(n);
    let mut sg = cg.to_vec();
    let mut sh = ch.to_vec();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    // map g's vertices in order of increasing class size
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in cg {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));
    let mut map = vec![usize::MAX; n];
    iso_extend(g, h, cg, ch, &order, 0, &mut map, 0)
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if used >> w & 1 == 1 || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        if iso_extend(g, h, cg, ch, order, depth + 1, map, used | 1 << w) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}
