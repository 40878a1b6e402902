//! Runs every structural lemma and checker cross-check over all labelled
//! graphs up to a given order (default 5).

use std::env;

use spectral_factors::theorems::{verify_lemma_suite, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let r = verify_lemma_suite(n_max, &RunConfig::default())?;
    for c in &r.checks {
        println!(
            "{:<40} {:>8} checked {:>4} failed",
            c.name, c.checked, c.failed
        );
    }
    println!("{:?} in {} ms", r.verdict, r.wall_time_ms);
    Ok(())
}
