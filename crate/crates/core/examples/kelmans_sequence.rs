//! Walks a unique-perfect-matching graph to `G(2n, 1)` by Kelmans shifts.

use spectral_factors::canon::are_isomorphic;
use spectral_factors::factors::kelmans_steps;
use spectral_factors::families::g_unique_pm;
use spectral_factors::spectral::rho;
use spectral_factors::theorems::format_real;
use spectral_factors::Graph;

fn main() -> spectral_factors::Result<()> {
    // a path on 8 vertices has the unique perfect matching {01, 23, 45, 67}
    let path = Graph::from_edges(8, (0..7).map(|i| (i, i + 1)))?;
    for (i, step) in kelmans_steps(&path)?.iter().enumerate() {
        let moved = if i == 0 {
            "start".to_string()
        } else {
            format!("shift {} <- {}", step.u, step.v)
        };
        println!(
            "G_{i}: {moved:<14} m={:<3} rho={}",
            step.graph.size(),
            format_real(rho(&step.graph)?)
        );
    }
    let last = kelmans_steps(&path)?.pop().unwrap().graph;
    println!(
        "last graph isomorphic to G(8,1): {}",
        are_isomorphic(&last, &g_unique_pm(8)?)
    );
    Ok(())
}
