//! Spectral radius, Perron vector and tie-aware comparison.

use spectral_factors::families::{g_unique_pm, h_na};
use spectral_factors::spectral::{
    compare_rho, perron_vector, spectral_radius, Threshold, DEFAULT_TIE_TOL,
};
use spectral_factors::theorems::format_real;
use spectral_factors::Graph;

fn main() -> spectral_factors::Result<()> {
    let k5 = Graph::complete(5)?;
    let s = spectral_radius(&k5, 1e-12)?;
    println!(
        "rho(K5) = {} after {} iterations",
        format_real(s.rho),
        s.iterations
    );

    // disconnected graphs take the maximum over components
    let h = h_na(6, 1)?;
    println!(
        "rho(K1 u K5) = {}",
        format_real(spectral_radius(&h, 1e-12)?.rho)
    );

    let g = g_unique_pm(6)?;
    let p = perron_vector(&g, 1e-12)?;
    let x: Vec<String> = p
        .perron
        .unwrap()
        .iter()
        .map(|v| format!("{v:.4}"))
        .collect();
    println!("Perron vector of G(6,1): [{}]", x.join(", "));

    let o = compare_rho(&k5, &Graph::complete(4)?, DEFAULT_TIE_TOL)?;
    println!(
        "K5 vs K4: {:?} (margin {})",
        o.verdict,
        format_real(o.margin)
    );

    // a threshold computed once and reused across many graphs
    let th = Threshold::new(h, DEFAULT_TIE_TOL)?;
    for name_graph in [("K5 u K1", k5.union(&Graph::empty(1)?)?), ("C6", cycle(6))] {
        println!(
            "{} vs K1 u K5: {:?}",
            name_graph.0,
            th.compare(&name_graph.1)?.verdict
        );
    }
    Ok(())
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}
