//! Graph sources for exhaustive runs and the chunked, order-preserving scan
//! that every verifier is built on.

use std::collections::HashSet;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::canon::{canonical_code, canonical_form, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::read_graph6_stream;

/// Largest order enumerated internally (`2^21` labelled graphs).
pub const INTERNAL_MAX_ORDER: usize = 7;

/// Largest order for which [`isomorphism_classes`] is offered.
pub const CLASSES_MAX_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub enum SourceMode {
    /// Every labelled graph on `n` vertices, by edge bitmask.
    InternalBitmask { n: usize },
    /// One graph per line of a graph6 file.
    Graph6Stream { path: PathBuf },
    /// An explicit list.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnumerationSource {
    pub mode: SourceMode,
    pub connected_only: bool,
    /// One representative per isomorphism class.
    pub dedup: bool,
}

impl EnumerationSource {
    pub fn internal(n: usize) -> Self {
        EnumerationSource {
            mode: SourceMode::InternalBitmask { n },
            connected_only: false,
            dedup: false,
        }
    }

    pub fn graph6_file(path: impl Into<PathBuf>) -> Self {
        EnumerationSource {
            mode: SourceMode::Graph6Stream { path: path.into() },
            connected_only: false,
            dedup: false,
        }
    }

    pub fn graphs(graphs: Vec<Graph>) -> Self {
        EnumerationSource {
            mode: SourceMode::Graphs(graphs),
            connected_only: false,
            dedup: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn deduplicated(mut self) -> Self {
        self.dedup = true;
        self
    }

    /// Short description for report parameters.
    pub fn describe(&self) -> String {
        let base = match &self.mode {
            SourceMode::InternalBitmask { n } => format!("internal:{n}"),
            SourceMode::Graph6Stream { path } => format!("graph6:{}", path.display()),
            SourceMode::Graphs(g) => format!("list:{}", g.len()),
        };
        let mut flags = String::new();
        if self.connected_only {
            flags.push_str("+connected");
        }
        if self.dedup {
            flags.push_str("+dedup");
        }
        base + &flags
    }
}

/// Work split into contiguous pieces, visited in a fixed order.
pub(crate) enum Plan {
    Masks { n: usize, total: u64 },
    List(Vec<Graph>),
}

const CHUNKS: u64 = 64;

impl Plan {
    pub fn from_source(src: &EnumerationSource) -> Result<Plan> {
        let plan = match (&src.mode, src.dedup) {
            (SourceMode::InternalBitmask { n }, false) => {
                check_internal(*n)?;
                Plan::Masks {
                    n: *n,
                    total: 1u64 << (n * n.saturating_sub(1) / 2),
                }
            }
            (SourceMode::InternalBitmask { n }, true) => {
                check_internal(*n)?;
                Plan::List(isomorphism_classes(*n)?)
            }
            (SourceMode::Graph6Stream { path }, dedup) => {
                let file =
                    File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let graphs = read_graph6_stream(BufReader::new(file))?;
                Plan::List(if dedup { dedup_graphs(graphs)? } else { graphs })
            }
            (SourceMode::Graphs(g), dedup) => Plan::List(if dedup {
                dedup_graphs(g.clone())?
            } else {
                g.clone()
            }),
        };
        Ok(match plan {
            Plan::List(list) if src.connected_only => {
                Plan::List(list.into_iter().filter(Graph::is_connected).collect())
            }
            p => p,
        })
    }

    fn chunk_count(&self) -> u64 {
        match self {
            Plan::Masks { total, .. } => CHUNKS.min(*total),
            Plan::List(l) => CHUNKS.min(l.len() as u64),
        }
    }

    fn chunk_bounds(&self, c: u64) -> (u64, u64) {
        let total = match self {
            Plan::Masks { total, .. } => *total,
            Plan::List(l) => l.len() as u64,
        };
        let k = self.chunk_count();
        (total * c / k, total * (c + 1) / k)
    }
}

fn check_internal(n: usize) -> Result<()> {
    if n > INTERNAL_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "internal enumeration limited to {INTERNAL_MAX_ORDER} vertices, got {n}; supply a graph6 file"
        )));
    }
    Ok(())
}

fn dedup_graphs(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if g.order() > CANON_MAX_ORDER {
            return Err(Error::Capacity(format!(
                "deduplication limited to order {CANON_MAX_ORDER}, got {}",
                g.order()
            )));
        }
        if seen.insert(canonical_code(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Runs `work` over contiguous chunks of `total` items on `jobs` threads
/// and returns the partial results in chunk order.
pub(crate) fn run_chunks<P, W>(chunks: u64, jobs: usize, work: W) -> Result<Vec<P>>
where
    P: Send,
    W: Fn(u64) -> Result<P> + Sync + Send,
{
    if jobs <= 1 {
        return (0..chunks).map(work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    pool.install(|| (0..chunks).into_par_iter().map(&work).collect())
}

/// Visits every graph of the source. Partial states are produced per chunk
/// and returned in enumeration order, so merging them left to right is
/// independent of scheduling.
pub(crate) fn scan<P, V>(src: &EnumerationSource, jobs: usize, visit: V) -> Result<Vec<P>>
where
    P: Default + Send,
    V: Fn(&Graph, &mut P) -> Result<()> + Sync + Send,
{
    let plan = Plan::from_source(src)?;
    let connected_only = src.connected_only;
    run_chunks(plan.chunk_count(), jobs, |c| {
        let (lo, hi) = plan.chunk_bounds(c);
        let mut part = P::default();
        match &plan {
            Plan::Masks { n, .. } => {
                for mask in lo..hi {
                    let g = Graph::from_edge_mask(*n, mask);
                    if connected_only && !g.is_connected() {
                        continue;
                    }
                    visit(&g, &mut part)?;
                }
            }
            Plan::List(list) => {
                for g in &list[lo as usize..hi as usize] {
                    visit(g, &mut part)?;
                }
            }
        }
        Ok(part)
    })
}

/// Every graph the source yields, in enumeration order.
pub fn enumerate_graphs(src: &EnumerationSource) -> Result<Box<dyn Iterator<Item = Graph>>> {
    let connected_only = src.connected_only;
    Ok(match Plan::from_source(src)? {
        Plan::Masks { n, total } => Box::new(
            (0..total)
                .map(move |m| Graph::from_edge_mask(n, m))
                .filter(move |g| !connected_only || g.is_connected()),
        ),
        Plan::List(list) => Box::new(list.into_iter()),
    })
}

/// One canonical representative of every isomorphism class on `n`
/// vertices, sorted by canonical code. Built by adding a vertex to each
/// class on `n − 1` vertices in every possible way.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    if n > CLASSES_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "class generation limited to {CLASSES_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut classes = vec![Graph::empty(0)?];
    for m in 1..=n {
        let mut next: Vec<(Vec<u8>, Graph)> = Vec::new();
        let mut seen = HashSet::new();
        for base in &classes {
            for nbrs in 0..1u64 << (m - 1) {
                let mut adj = vec![0u64; m];
                for v in 0..m - 1 {
                    adj[v] = base.neighbors(v).bits() | (nbrs >> v & 1) << (m - 1);
                }
                adj[m - 1] = nbrs;
                let g = Graph::from_adjacency(&adj)?;
                let code = canonical_code(&g)?;
                if seen.insert(code.clone()) {
                    next.push((code, canonical_form(&g)?));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        classes = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| isomorphism_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected = isomorphism_classes(5)
            .unwrap()
            .iter()
            .filter(|g| g.is_connected())
            .count();
        assert_eq!(connected, 21);
        assert!(isomorphism_classes(9).is_err());
    }

    #[test]
    fn sources() {
        assert_eq!(
            enumerate_graphs(&EnumerationSource::internal(4))
                .unwrap()
                .count(),
            64
        );
        let src = EnumerationSource::internal(4).deduplicated();
        assert_eq!(enumerate_graphs(&src).unwrap().count(), 11);
        let src = EnumerationSource::internal(4).connected().deduplicated();
        assert_eq!(enumerate_graphs(&src).unwrap().count(), 6);
        let src = EnumerationSource::internal(4).connected();
        assert_eq!(enumerate_graphs(&src).unwrap().count(), 38);
        assert!(enumerate_graphs(&EnumerationSource::internal(8)).is_err());
    }

    #[test]
    fn scan_is_order_preserving_across_jobs() {
        let src = EnumerationSource::internal(5).connected();
        let collect = |jobs| {
            scan(&src, jobs, |g: &Graph, acc: &mut Vec<usize>| {
                acc.push(g.size());
                Ok(())
            })
            .unwrap()
            .concat()
        };
        let one = collect(1);
        assert_eq!(one.len(), 728);
        assert_eq!(one, collect(3));
    }
}
