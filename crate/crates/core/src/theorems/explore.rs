//! Evidence gathering for the unique `k`-factor extremal problem.

use std::time::Instant;

use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::factors::{count_factors, for_each_subset, DegreeSpec};
use crate::families::{circulant, g_unique_kfactor};
use crate::graph::Graph;
use crate::spectral::{classify, spectral_radius, Verdict};

use super::enumerate::{scan, EnumerationSource};
use super::report::{format_real, Check, RunMode, Tally, VerificationReport};
use super::verify::RunConfig;

/// Whether `g` has exactly one `k`-factor (capped backtracking count).
pub fn has_unique_k_factor(g: &Graph, k: usize) -> bool {
    count_factors(g, &DegreeSpec::exact(&vec![k; g.order()]), 2) == 1
}

/// Connected circulant `degree`-regular graphs on `order` vertices with an
/// even degree, one per offset set.
pub fn even_circulants(order: usize, degree: usize) -> Result<Vec<Graph>> {
    if degree % 2 != 0 {
        return Err(Error::Parameter(format!(
            "degree must be even, got {degree}"
        )));
    }
    let half = degree / 2;
    // offsets 1..ceil(order/2)−1 each contribute 2 to the degree
    let max_offset = (order - 1) / 2;
    let mut out = Vec::new();
    if half > max_offset {
        return Ok(out);
    }
    for_each_subset(max_offset, half, |s| {
        let offsets: Vec<usize> = s.iter().map(|i| i + 1).collect();
        if let Ok(g) = circulant(order, &offsets) {
            out.push(g);
        }
        false
    });
    Ok(out)
}

#[derive(Default)]
struct Best {
    tally: Tally,
    rho: f64,
    graphs: Vec<Graph>,
}

/// Scans the source for graphs with a unique `k`-factor and reports the
/// largest spectral radius found, compared against `G(2n, k)` (`k <= n`) or
/// against the joins `K_{2n−k} ∇ H` over circulant `2(k−n)`-regular `H` of
/// order `h_order` (`k > n`; `h_order` defaults to `k`).
pub fn explore_problem_5_1(
    two_n: usize,
    k: usize,
    h_order: Option<usize>,
    src: &EnumerationSource,
    cfg: &RunConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if two_n % 2 != 0 || two_n < 2 {
        return Err(Error::Parameter(format!("order must be even, got {two_n}")));
    }
    if k < 1 || k >= two_n {
        return Err(Error::Parameter(format!("need 1 <= k < 2n, got k={k}")));
    }
    let n = two_n / 2;
    let mut r = VerificationReport::new("problem5.1", RunMode::Exploration);
    r.param("two_n", two_n);
    r.param("k", k);
    r.param("source", src.describe());

    // reference: the construction, or the best join candidate
    let mut reference: Option<(Graph, f64)> = None;
    if k <= n {
        let g = g_unique_kfactor(two_n, k)?;
        let mut c = Check::new("construction_has_unique_k_factor");
        c.record(has_unique_k_factor(&g, k), &g);
        r.checks.push(c);
        let rho = spectral_radius(&g, cfg.tie_tol / 1000.0)?.rho;
        reference = Some((g, rho));
    } else {
        let order = h_order.unwrap_or(k);
        r.param("h_order", order);
        if order != k {
            r.notes.push(format!(
                "|V(H)| = {order} differs from k = {k}; joins then have order {}",
                two_n - k + order
            ));
        }
        let hub = Graph::complete(two_n - k)?;
        let mut c = Check::new("join_candidates_with_unique_k_factor");
        for h in even_circulants(order, 2 * (k - n))? {
            let g = hub.join(&h)?;
            let unique = g.order() == two_n && has_unique_k_factor(&g, k);
            c.checked += 1;
            r.notes.push(format!(
                "candidate {} rho={} unique_k_factor={unique}",
                crate::graph6::to_graph6_string(&g),
                format_real(spectral_radius(&g, cfg.tie_tol / 1000.0)?.rho)
            ));
            if unique {
                let rho = spectral_radius(&g, cfg.tie_tol / 1000.0)?.rho;
                if reference.as_ref().map_or(true, |(_, best)| rho > *best) {
                    reference = Some((g, rho));
                }
            }
        }
        r.checks.push(c);
    }

    let tie_tol = cfg.tie_tol;
    let parts = scan(src, cfg.jobs, |g, best: &mut Best| {
        if g.order() != two_n {
            return Err(Error::Parameter(format!(
                "source yielded a graph of order {}, expected {two_n}",
                g.order()
            )));
        }
        best.tally.checked += 1;
        if !has_unique_k_factor(g, k) {
            return Ok(());
        }
        best.tally.qualifying += 1;
        let rho = spectral_radius(g, tie_tol / 10.0)?.rho;
        if best.graphs.is_empty() {
            best.rho = rho;
            best.graphs.push(g.clone());
            return Ok(());
        }
        match classify(rho, best.rho, tie_tol).verdict {
            Verdict::Greater => {
                best.rho = rho;
                best.graphs = vec![g.clone()];
            }
            Verdict::Tie => best.graphs.push(g.clone()),
            Verdict::Less => {}
        }
        Ok(())
    })?;

    let mut total = Best::default();
    for p in parts {
        total.tally.checked += p.tally.checked;
        total.tally.qualifying += p.tally.qualifying;
        if p.graphs.is_empty() {
            continue;
        }
        if total.graphs.is_empty() {
            total.rho = p.rho;
            total.graphs = p.graphs;
            continue;
        }
        match classify(p.rho, total.rho, tie_tol).verdict {
            Verdict::Greater => {
                total.rho = p.rho;
                total.graphs = p.graphs;
            }
            Verdict::Tie => total.graphs.extend(p.graphs),
            Verdict::Less => {}
        }
    }
    for g in &total.graphs {
        total.tally.attainer(g);
    }
    if let Some((g, rho)) = &reference {
        r.threshold_rho = Some(format_real(*rho));
        if !total.graphs.is_empty() {
            let verdict = classify(total.rho, *rho, tie_tol).verdict;
            if verdict == Verdict::Greater {
                for h in &total.graphs {
                    total.tally.counterexample(h);
                }
            }
            let iso = total.graphs.iter().any(|h| are_isomorphic(h, g));
            r.notes.push(format!(
                "max rho {} vs reference {}: {:?}; argmax isomorphic to reference: {iso}",
                format_real(total.rho),
                format_real(*rho),
                verdict
            ));
        }
    } else {
        r.notes
            .push("no reference graph with a unique k-factor".to_string());
    }
    if total.graphs.is_empty() {
        r.notes
            .push("no enumerated graph has a unique k-factor".to_string());
    }
    total.tally.fill(&mut r);
    r.conclude();
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
