//! Looks for the graphs with a unique `k`-factor and the largest spectral
//! radius, next to the known constructions.

use spectral_factors::families::g_unique_kfactor;
use spectral_factors::theorems::{
    explore_problem_5_1, has_unique_k_factor, EnumerationSource, RunConfig,
};

fn main() -> spectral_factors::Result<()> {
    for (two_n, k) in [(8, 2), (10, 2)] {
        let g = g_unique_kfactor(two_n, k)?;
        println!(
            "G({two_n},{k}) has a unique {k}-factor: {}",
            has_unique_k_factor(&g, k)
        );
    }
    let cfg = RunConfig::default();
    for k in [1, 2, 4] {
        let src = EnumerationSource::internal(6).connected();
        let r = explore_problem_5_1(6, k, None, &src, &cfg)?;
        println!(
            "2n=6 k={k}: {} qualifying, attainers {:?}",
            r.qualifying, r.extremal_attainers
        );
        for note in &r.notes {
            println!("  {note}");
        }
    }
    Ok(())
}
