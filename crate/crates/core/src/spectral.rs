//! Spectral radius and Perron vectors of adjacency matrices.
//!
//! Power iteration on `A + I` from the all-ones vector. The shift keeps the
//! dominant eigenvalue strictly separated from `-ρ` on bipartite graphs, and
//! the all-ones start has positive overlap with the Perron direction of every
//! connected component. Convergence is certified by the residual
//! `‖Ax − ρx‖∞` with `ρ` the Rayleigh quotient of the unit iterate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_TIE_TOL: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Largest adjacency eigenvalue of one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub rho: f64,
    /// Unit positive eigenvector; present only for connected graphs.
    pub perron: Option<Vec<f64>>,
    pub iterations: usize,
    pub residual: f64,
}

/// Outcome of comparing two spectral radii.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Less,
    Tie,
    Greater,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RhoOrder {
    pub verdict: Verdict,
    /// `|ρ(G) − ρ(H)|`
    pub margin: f64,
}

struct ComponentResult {
    rho: f64,
    vector: [f64; MAX_ORDER],
    iterations: usize,
    residual: f64,
}

fn power_iteration(g: &Graph, comp: VertexSet, tol: f64) -> Result<ComponentResult> {
    let verts = comp.to_vec();
    let mut x = [0.0f64; MAX_ORDER];
    if verts.len() == 1 {
        x[verts[0]] = 1.0;
        return Ok(ComponentResult {
            rho: 0.0,
            vector: x,
            iterations: 0,
            residual: 0.0,
        });
    }
    let init = 1.0 / (verts.len() as f64).sqrt();
    for &v in &verts {
        x[v] = init;
    }
    let mut ax = [0.0f64; MAX_ORDER];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        let mut rho = 0.0;
        for &v in &verts {
            let s: f64 = g.neighbors(v).iter().map(|w| x[w]).sum();
            ax[v] = s;
            rho += s * x[v];
        }
        residual = verts
            .iter()
            .map(|&v| (ax[v] - rho * x[v]).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(ComponentResult {
                rho,
                vector: x,
                iterations: it,
                residual,
            });
        }
        let mut norm = 0.0;
        for &v in &verts {
            let y = ax[v] + x[v];
            x[v] = y;
            norm += y * y;
        }
        let norm = norm.sqrt();
        for &v in &verts {
            x[v] /= norm;
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// Spectral radius within `tol`; for disconnected graphs the maximum over
/// components, without a Perron vector.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::Parameter(
            "spectral radius of the null graph is undefined".into(),
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let comps = g.components();
    if comps.len() == 1 {
        let r = power_iteration(g, comps[0], tol)?;
        return Ok(Spectrum {
            rho: r.rho,
            perron: Some(r.vector[..g.order()].to_vec()),
            iterations: r.iterations,
            residual: r.residual,
        });
    }
    let mut best = Spectrum {
        rho: 0.0,
        perron: None,
        iterations: 0,
        residual: 0.0,
    };
    for c in comps {
        if c.len() == 1 {
            continue;
        }
        let r = power_iteration(g, c, tol)?;
        best.rho = best.rho.max(r.rho);
        best.iterations += r.iterations;
        best.residual = best.residual.max(r.residual);
    }
    Ok(best)
}

/// Shorthand for `spectral_radius(g, DEFAULT_TOL)?.rho`.
pub fn rho(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.rho)
}

/// Perron vector of a connected graph. `K_1` gives `ρ = 0` and `(1)`.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<Spectrum> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    spectral_radius(g, tol)
}

/// Classifies two already computed radii against the tie tolerance.
pub fn classify(a: f64, b: f64, tie_tol: f64) -> RhoOrder {
    let margin = (a - b).abs();
    let verdict = if margin <= tie_tol {
        Verdict::Tie
    } else if a < b {
        Verdict::Less
    } else {
        Verdict::Greater
    };
    RhoOrder { verdict, margin }
}

/// Compares `ρ(G)` with `ρ(H)`. A tie is re-examined once at a tolerance
/// 100× tighter before being reported.
pub fn compare_rho(g: &Graph, h: &Graph, tie_tol: f64) -> Result<RhoOrder> {
    let a = spectral_radius(g, tie_tol / 10.0)?.rho;
    let b = spectral_radius(h, tie_tol / 10.0)?.rho;
    compare_with_threshold(g, a, b, tie_tol, |tol| {
        spectral_radius(h, tol).map(|s| s.rho)
    })
}

/// Compares `ρ(G)` with a threshold known to `threshold_tol` or better.
/// `threshold_at` recomputes the threshold at a tighter tolerance on a tie.
pub(crate) fn compare_with_threshold<F>(
    g: &Graph,
    rho_g: f64,
    threshold: f64,
    tie_tol: f64,
    threshold_at: F,
) -> Result<RhoOrder>
where
    F: FnOnce(f64) -> Result<f64>,
{
    let first = classify(rho_g, threshold, tie_tol);
    if first.verdict != Verdict::Tie {
        return Ok(first);
    }
    let tight = tie_tol / 1000.0;
    let a = spectral_radius(g, tight)?.rho;
    let b = threshold_at(tight)?;
    Ok(classify(a, b, tie_tol))
}

/// Compares a graph against a fixed reference whose radius was computed
/// once at high precision.
pub struct Threshold {
    pub graph: Graph,
    pub rho: f64,
    tie_tol: f64,
}

impl Threshold {
    pub fn new(graph: Graph, tie_tol: f64) -> Result<Threshold> {
        let rho = spectral_radius(&graph, tie_tol / 1000.0)?.rho;
        Ok(Threshold {
            graph,
            rho,
            tie_tol,
        })
    }

    pub fn tie_tol(&self) -> f64 {
        self.tie_tol
    }

    /// Same contract as [`compare_rho`] with `H` the reference graph.
    pub fn compare(&self, g: &Graph) -> Result<RhoOrder> {
        // cheap certified upper bounds: ρ ≤ Δ and ρ ≤ (−1 + √(1 + 8m)) / 2
        let m = g.size() as f64;
        let bound = (g.max_degree() as f64).min(((1.0 + 8.0 * m).sqrt() - 1.0) / 2.0);
        if bound < self.rho - self.tie_tol {
            return Ok(RhoOrder {
                verdict: Verdict::Less,
                margin: self.rho - bound,
            });
        }
        let a = spectral_radius(g, self.tie_tol / 10.0)?.rho;
        compare_with_threshold(g, a, self.rho, self.tie_tol, |_| Ok(self.rho))
    }
}
