//! Seeded sampling for the theorems whose orders are out of exhaustive
//! reach. A clean run is evidence, never a proof.

use spectral_factors::theorems::{verify_thm_1_2, verify_thm_5_1, RunConfig, Sampler, Variant};

fn main() -> spectral_factors::Result<()> {
    let cfg = RunConfig::default();
    for sampler in [
        Sampler::uniform(7, 2000, 0.5, 1.0),
        Sampler::near_extremal(7, 2000, 4),
    ] {
        let r = verify_thm_1_2(20, 1, 2, &sampler, &cfg)?;
        println!(
            "thm1.2 {:?}: {:?}, {} of {} qualifying",
            sampler.strategy, r.verdict, r.qualifying, r.checked
        );
        let r = verify_thm_5_1(12, 1, 1, Variant::FractionalPm, &sampler, &cfg)?;
        println!(
            "thm5.1 fractional {:?}: {:?}, {} qualifying",
            sampler.strategy, r.verdict, r.qualifying
        );
    }
    let r = verify_thm_1_2(20, 3, 1, &Sampler::near_extremal(1, 500, 3), &cfg)?;
    println!("{}", r.to_canonical_json());
    Ok(())
}
