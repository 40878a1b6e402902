//! `[a, b]`-factors, odd `[1, b]`-factors, `f`-factors and fractional
//! perfect matchings, each returning a factor or a violating vertex set.

use spectral_factors::factors::{
    ab_factor, f_factor, fractional_pm, odd_1b_factor, FactorQuery, FactorResult,
};
use spectral_factors::families::{hub_clique_graph, t_graph};
use spectral_factors::Graph;

fn report(name: &str, r: &FactorResult) {
    match (r.factor(), r.witness()) {
        (Some(h), _) => println!("{name}: found {} edges via {:?}", h.size(), r.method),
        (_, Some(s)) => println!("{name}: refuted by S = {:?} via {:?}", s.to_vec(), r.method),
        _ => println!("{name}: {:?}", r.outcome),
    }
}

fn main() -> spectral_factors::Result<()> {
    let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)))?;
    report("C6 [2,2]", &ab_factor(&c6, FactorQuery::new(2, 2, false)?)?);

    let star = Graph::from_edges(5, (1..5).map(|i| (0, i)))?;
    report(
        "K1,4 odd [1,3]",
        &ab_factor(&star, FactorQuery::new(1, 3, true)?)?,
    );
    report(
        "K1,4 [1,4]",
        &ab_factor(&star, FactorQuery::new(1, 4, false)?)?,
    );

    report(
        "T(20,3,1) odd [1,3]",
        &odd_1b_factor(&t_graph(20, 3, 1)?, 3)?,
    );
    report(
        "K1,3 f=[3,2,1,1]",
        &f_factor(
            &Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)])?,
            &[3, 2, 1, 1],
        )?,
    );

    let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    let fr = fractional_pm(&c5);
    if let Some(m) = &fr.matching {
        println!(
            "C5 fractional: total {} weights {:?}",
            m.total(),
            m.weights.iter().map(|(_, w)| w).collect::<Vec<_>>()
        );
    }
    report(
        "K1 v (K9 u 2K1) fractional",
        &fractional_pm(&hub_clique_graph(12, 1, 1)?).result,
    );
    Ok(())
}
