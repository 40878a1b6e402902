//! Exhaustive checks of the structural and spectral lemmas, and of every
//! checker against its oracle, over all labelled graphs of small order.

use std::time::Instant;

use crate::canon::{are_isomorphic, stable_coloring};
use crate::error::{Error, Result};
use crate::factors::{
    count_factors, f_factor, find_factor, fractional_pm, is_unique_pm,
    kelmans_sequence_to_extremal, odd_1b_factor, odd_1b_factor_by_sweep, one_b_factor_exists,
    perfect_matching, sweep_witness, tutte_berge_deficiency, Condition, DegreeSpec, FactorResult,
    Outcome, SearchOutcome,
};
use crate::families::{clique_join_cliques, g_unique_pm, two_pendant_join};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{parse_graph6, write_graph6};
use crate::matching::{count_perfect_matchings, matching_number, max_matching};
use crate::quotient::{matrix_spectral_radius, quotient_matrix};
use crate::spectral::{
    classify, compare_with_threshold, perron_vector, spectral_radius, Verdict, DEFAULT_TOL,
};

use super::enumerate::{scan, EnumerationSource, INTERNAL_MAX_ORDER};
use super::report::{Check, RunMode, VerificationReport};
use super::verify::RunConfig;

const CHECKS: &[&str] = &[
    "graph6_round_trip",
    "odd_component_parity",
    "rho_degree_envelope",
    "edge_addition_increases_rho",
    "kelmans_shift_preserves_size",
    "kelmans_shift_increases_rho",
    "two_pendant_join_maximality",
    "equitable_quotient_radius",
    "tutte_berge_identity",
    "perfect_matching_vs_tutte_sweep",
    "unique_pm_alternating_cycle_vs_count",
    "unique_pm_edge_bound",
    "unique_pm_bridge_in_matching",
    "kelmans_sequence_reaches_extremal",
    "odd_factor_sweep_vs_backtracking",
    "odd_factor_fast_path_vs_sweep",
    "odd_factor_b1_is_perfect_matching",
    "f_factor_gadget_vs_backtracking",
    "fractional_double_cover_vs_sweep",
    "one_b_factor_vs_backtracking",
    "factor_results_revalidate",
];

/// Order bound for the clique-redistribution inequality.
const REDISTRIBUTION_MAX_ORDER: usize = 12;

struct Suite(Vec<Check>);

impl Default for Suite {
    fn default() -> Self {
        Suite(CHECKS.iter().map(|c| Check::new(c)).collect())
    }
}

impl Suite {
    fn record(&mut self, name: &str, ok: bool, g: &Graph) {
        let i = CHECKS.iter().position(|c| *c == name).expect("known check");
        self.0[i].record(ok, g);
    }
}

/// Radii of `K_t ∇ (2K_1 ∪ K_{n−t−2})` for `t = 0..n−2`.
fn two_pendant_radii(n: usize, tol: f64) -> Result<Vec<f64>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    (0..=n - 2)
        .map(|t| Ok(spectral_radius(&two_pendant_join(n, t)?, tol)?.rho))
        .collect()
}

fn revalidates(r: &FactorResult, g: &Graph, spec: &DegreeSpec, cond: Condition) -> bool {
    match &r.outcome {
        Outcome::Found(h) => {
            spec.is_satisfied_by(h) && h.edges().iter().all(|e| g.has_edge(e.u, e.v))
        }
        Outcome::Refuted(s) => match r.method {
            crate::factors::Method::DegreeObstruction => true,
            _ => cond.is_violated_by(g, *s),
        },
        Outcome::NotFound { exhaustive } => *exhaustive,
    }
}

fn check_graph(g: &Graph, radii: &[f64], tie_tol: f64, s: &mut Suite) -> Result<()> {
    let n = g.order();
    let connected = g.is_connected() && n > 0;

    s.record(
        "graph6_round_trip",
        parse_graph6(&write_graph6(g)).as_ref() == Ok(g),
        g,
    );
    let parity = (0..1u64 << n).all(|bits| {
        let set = VertexSet::from_bits(bits);
        g.odd_components(set) % 2 == (n - set.len()) % 2
    });
    s.record("odd_component_parity", parity, g);

    if n > 0 {
        let rho = spectral_radius(g, tie_tol / 1000.0)?.rho;
        let avg = 2.0 * g.size() as f64 / n as f64;
        let dmax = g.max_degree() as f64;
        s.record(
            "rho_degree_envelope",
            avg.max(dmax.sqrt()) <= rho + 1e-9 && rho <= dmax + 1e-9,
            g,
        );
    }

    if connected && n >= 2 {
        let base = spectral_radius(g, tie_tol / 10.0)?.rho;
        let rho_at = |tol: f64| spectral_radius(g, tol).map(|x| x.rho);
        for e in g.non_edges() {
            let h = g.with_edge(e.u, e.v);
            let a = spectral_radius(&h, tie_tol / 10.0)?.rho;
            let o = compare_with_threshold(&h, a, base, tie_tol, rho_at)?;
            s.record(
                "edge_addition_increases_rho",
                o.verdict == Verdict::Greater,
                g,
            );
        }

        let x = perron_vector(g, DEFAULT_TOL)?.perron.expect("connected");
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let h = g.kelmans_shift(u, v);
                s.record("kelmans_shift_preserves_size", h.size() == g.size(), g);
                if x[u] < x[v] || g.movable_neighbors(u, v).is_empty() || !h.is_connected() {
                    continue;
                }
                let a = spectral_radius(&h, tie_tol / 10.0)?.rho;
                let o = compare_with_threshold(&h, a, base, tie_tol, rho_at)?;
                s.record(
                    "kelmans_shift_increases_rho",
                    o.verdict == Verdict::Greater,
                    g,
                );
            }
        }

        let t_min = g
            .non_edges()
            .iter()
            .map(|e| g.degree(e.u).max(g.degree(e.v)))
            .min();
        if let Some(t) = t_min {
            let ok = match classify(base, radii[t], tie_tol).verdict {
                Verdict::Less => true,
                Verdict::Tie => are_isomorphic(g, &two_pendant_join(n, t)?),
                Verdict::Greater => false,
            };
            s.record("two_pendant_join_maximality", ok, g);
        }

        let colors = stable_coloring(g);
        let k = colors.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut cells = vec![VertexSet::EMPTY; k];
        for (v, &c) in colors.iter().enumerate() {
            cells[c as usize].insert(v);
        }
        let ok = match quotient_matrix(g, &cells) {
            Ok(q) => (matrix_spectral_radius(&q, 1e-12)? - base).abs() <= 1e-8,
            Err(_) => false,
        };
        s.record("equitable_quotient_radius", ok, g);
    }

    let nu = matching_number(g);
    s.record(
        "tutte_berge_identity",
        n - 2 * nu == tutte_berge_deficiency(g)?,
        g,
    );
    let pm = perfect_matching(g);
    let tutte = sweep_witness(g, Condition::Tutte)?;
    s.record(
        "perfect_matching_vs_tutte_sweep",
        pm.is_found() == tutte.is_none(),
        g,
    );

    let unique = is_unique_pm(g);
    s.record(
        "unique_pm_alternating_cycle_vs_count",
        unique == (count_perfect_matchings(g, 2) == 1),
        g,
    );
    if unique {
        s.record("unique_pm_edge_bound", 4 * g.size() <= n * n, g);
        if connected {
            let m = max_matching(g);
            let bridges = g.bridges();
            s.record(
                "unique_pm_bridge_in_matching",
                m.edges.iter().any(|e| bridges.contains(e)),
                g,
            );
            let seq = kelmans_sequence_to_extremal(g)?;
            let mut ok = are_isomorphic(seq.last().expect("non-empty"), &g_unique_pm(n)?);
            let mut prev = f64::NEG_INFINITY;
            for h in &seq {
                let r = spectral_radius(h, tie_tol / 10.0)?.rho;
                ok &= r >= prev - tie_tol && is_unique_pm(h);
                prev = r;
            }
            s.record("kelmans_sequence_reaches_extremal", ok, g);
        }
    }

    let mut all_valid = revalidates(&pm, g, &DegreeSpec::exact(&vec![1; n]), Condition::Tutte);
    for b in [1usize, 3] {
        let spec = DegreeSpec::odd_upto(n, b);
        let cond = Condition::Amahashi { b };
        let by_search = matches!(find_factor(g, &spec, None), SearchOutcome::Found(_));
        let by_sweep = odd_1b_factor_by_sweep(g, b)?;
        let fast = odd_1b_factor(g, b)?;
        s.record(
            "odd_factor_sweep_vs_backtracking",
            by_sweep.is_found() == by_search,
            g,
        );
        s.record(
            "odd_factor_fast_path_vs_sweep",
            fast.is_found() == by_sweep.is_found(),
            g,
        );
        if b == 1 {
            s.record(
                "odd_factor_b1_is_perfect_matching",
                fast.is_found() == pm.is_found(),
                g,
            );
        }
        all_valid &= revalidates(&by_sweep, g, &spec, cond) && revalidates(&fast, g, &spec, cond);
    }
    for f in 1..=3usize {
        let target = vec![f; n];
        let spec = DegreeSpec::exact(&target);
        let r = f_factor(g, &target)?;
        s.record(
            "f_factor_gadget_vs_backtracking",
            r.is_found() == (count_factors(g, &spec, 1) == 1),
            g,
        );
        all_valid &= revalidates(&r, g, &spec, Condition::Tutte);
    }
    let frac = fractional_pm(g);
    let iso_sweep = sweep_witness(g, Condition::Isolated { b: 1 })?;
    s.record(
        "fractional_double_cover_vs_sweep",
        frac.result.is_found() == iso_sweep.is_none(),
        g,
    );
    if let Some(m) = &frac.matching {
        all_valid &= m.is_perfect_in(g);
    }
    if let Some(w) = frac.result.witness() {
        all_valid &= Condition::Isolated { b: 1 }.is_violated_by(g, w);
    }
    let spec = DegreeSpec::interval(n, 1, 2);
    let r = one_b_factor_exists(g, 2)?;
    s.record(
        "one_b_factor_vs_backtracking",
        r.is_found() == matches!(find_factor(g, &spec, None), SearchOutcome::Found(_)),
        g,
    );
    all_valid &= revalidates(&r, g, &spec, Condition::Isolated { b: 2 });
    s.record("factor_results_revalidate", all_valid, g);
    Ok(())
}

/// Concentrating vertices into the largest clique of
/// `K_s ∇ (K_{n_1} ∪ ... ∪ K_{n_t})` raises the spectral radius.
fn clique_redistribution(max_order: usize, tie_tol: f64) -> Result<Check> {
    let mut check = Check::new("clique_redistribution_inequality");
    fn partitions(
        total: usize,
        parts: usize,
        max: usize,
        min: usize,
        out: &mut Vec<Vec<usize>>,
        cur: &mut Vec<usize>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in (min..=max.min(total)).rev() {
            cur.push(first);
            partitions(total - first, parts - 1, first, min, out, cur);
            cur.pop();
        }
    }
    for n in 2..=max_order {
        for s in 0..n {
            for t in 2..=n - s {
                for p in 1..=(n - s) / t {
                    let big = n - s - p * (t - 1);
                    let target = clique_join_cliques(s, &[vec![big], vec![p; t - 1]].concat())?;
                    let target_rho = spectral_radius(&target, tie_tol / 1000.0)?.rho;
                    let mut parts = Vec::new();
                    partitions(n - s, t, n - s, p, &mut parts, &mut Vec::new());
                    for sizes in parts.into_iter().filter(|ns| ns[0] < big) {
                        let g = clique_join_cliques(s, &sizes)?;
                        let rho = spectral_radius(&g, tie_tol / 1000.0)?.rho;
                        let ok = classify(rho, target_rho, tie_tol).verdict == Verdict::Less;
                        check.record(ok, &g);
                    }
                }
            }
        }
    }
    Ok(check)
}

/// Runs every property over all labelled graphs of order `1..=n_max`.
pub fn verify_lemma_suite(n_max: usize, cfg: &RunConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    if n_max > INTERNAL_MAX_ORDER {
        return Err(Error::Capacity(format!(
            "lemma suite limited to order {INTERNAL_MAX_ORDER}, got {n_max}"
        )));
    }
    let mut total = Suite::default();
    let mut checked = 0u64;
    for n in 1..=n_max {
        let radii = two_pendant_radii(n, cfg.tie_tol / 1000.0)?;
        let parts = scan(
            &EnumerationSource::internal(n),
            cfg.jobs,
            |g, s: &mut Suite| check_graph(g, &radii, cfg.tie_tol, s),
        )?;
        for p in parts {
            for (acc, c) in total.0.iter_mut().zip(p.0) {
                acc.merge(c);
            }
        }
        checked += 1u64 << (n * (n - 1) / 2);
    }
    let mut r = VerificationReport::new("lemma_suite", RunMode::Exhaustive);
    r.param("n_max", n_max);
    r.checked = checked;
    r.checks = total.0;
    r.checks.push(clique_redistribution(
        REDISTRIBUTION_MAX_ORDER,
        cfg.tie_tol,
    )?);

    let mut c = Check::new("extremal_unique_pm_edge_count");
    for half in 1..=6 {
        let g = g_unique_pm(2 * half)?;
        c.record(
            g.size() == half * half && count_perfect_matchings(&g, 2) == 1,
            &g,
        );
    }
    r.checks.push(c);
    r.conclude();
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_up_to_five() {
        let r = verify_lemma_suite(5, &RunConfig::default()).unwrap();
        for c in &r.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures);
            assert!(c.checked > 0, "{} never ran", c.name);
        }
        assert!(r.passed());
        assert!(verify_lemma_suite(8, &RunConfig::default()).is_err());
    }
}
