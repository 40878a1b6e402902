//! Maximum matchings, unique perfect matchings and the Tutte–Berge formula.

use spectral_factors::factors::{
    gallai_edmonds_barrier, is_unique_pm, perfect_matching, tutte_berge_deficiency,
};
use spectral_factors::families::{g_unique_pm, t_graph};
use spectral_factors::matching::{count_perfect_matchings, matching_number, max_matching};
use spectral_factors::Graph;

fn main() -> spectral_factors::Result<()> {
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    let m = max_matching(&petersen);
    println!(
        "Petersen: matching of size {}, {} perfect matchings",
        m.len(),
        count_perfect_matchings(&petersen, 100)
    );

    let g = g_unique_pm(8)?;
    println!(
        "G(8,1): unique perfect matching = {}, bridges = {:?}",
        is_unique_pm(&g),
        g.bridges()
    );

    let t = t_graph(20, 1, 2)?;
    let nu = matching_number(&t);
    println!(
        "T(20,1,2): nu = {nu}, deficiency = {}, barrier = {:?}",
        tutte_berge_deficiency(&t)?,
        gallai_edmonds_barrier(&t).to_vec()
    );
    let r = perfect_matching(&t);
    println!(
        "perfect matching: {:?} via {:?}",
        r.witness().map(|s| s.to_vec()),
        r.method
    );
    Ok(())
}
