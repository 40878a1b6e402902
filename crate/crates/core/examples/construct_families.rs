//! Builds the extremal graph families and prints their graph6 codes.

use spectral_factors::families::{
    circulant, g_unique_kfactor, g_unique_pm, h_na, hub_clique_graph, t_graph, two_pendant_join,
};
use spectral_factors::graph6::to_graph6_string;
use spectral_factors::Graph;

fn show(name: &str, g: &Graph) {
    println!(
        "{name:<28} n={:<3} m={:<4} min_deg={:<3} {}",
        g.order(),
        g.size(),
        g.min_degree(),
        to_graph6_string(g)
    );
}

fn main() -> spectral_factors::Result<()> {
    show("H(6,1) = K1 u K5", &h_na(6, 1)?);
    show("H(7,2)", &h_na(7, 2)?);
    show("T(20,1,2)", &t_graph(20, 1, 2)?);
    show("T(20,3,1)", &t_graph(20, 3, 1)?);
    show("K1 v (K9 u 2K1)", &hub_clique_graph(12, 1, 1)?);
    show("G(8,1)", &g_unique_pm(8)?);
    show("G(10,2)", &g_unique_kfactor(10, 2)?);
    show("K2 v (2K1 u K4)", &two_pendant_join(8, 2)?);
    show("C(8; 1,3)", &circulant(8, &[1, 3])?);

    // parameter errors name the violated constraint
    if let Err(e) = t_graph(5, 1, 2) {
        println!("t_graph(5,1,2): {e}");
    }
    Ok(())
}
