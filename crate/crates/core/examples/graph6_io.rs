//! graph6 encoding, decoding and line streams.

use std::io::Cursor;

use spectral_factors::canon::canonical_form;
use spectral_factors::graph6::{parse_graph6, read_graph6_stream, to_graph6_string};
use spectral_factors::Graph;

fn main() -> spectral_factors::Result<()> {
    for code in ["Bw", "A_", "B?"] {
        let g = parse_graph6(code.as_bytes())?;
        println!("{code}: n={} edges={:?}", g.order(), g.edges());
    }
    let g = Graph::from_edges(7, [(0, 3), (3, 6), (6, 1), (1, 4)])?;
    let code = to_graph6_string(&g);
    println!(
        "{code} canonical {}",
        to_graph6_string(&canonical_form(&g)?)
    );
    assert_eq!(parse_graph6(code.as_bytes())?, g);

    let stream = "Bw\nA_\n\nBx\n";
    match read_graph6_stream(Cursor::new(stream)) {
        Ok(gs) => println!("{} graphs", gs.len()),
        Err(e) => println!("stream rejected: {e}"),
    }
    Ok(())
}
