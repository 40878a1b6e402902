//! Lists one graph per isomorphism class as graph6 lines.
//!
//! ```text
//! cargo run --release --example enumerate_graphs -- 8 graphs8.g6
//! ```

use std::env;
use std::fs::File;
use std::io::{BufWriter, Write};

use spectral_factors::graph6::to_graph6_string;
use spectral_factors::theorems::{enumerate_graphs, isomorphism_classes, EnumerationSource};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().collect();
    let n: usize = args.get(1).map_or(Ok(5), |s| s.parse())?;

    let classes = isomorphism_classes(n)?;
    let connected = classes.iter().filter(|g| g.is_connected()).count();
    eprintln!(
        "order {n}: {} classes, {connected} connected",
        classes.len()
    );

    match args.get(2) {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            for g in &classes {
                writeln!(out, "{}", to_graph6_string(g))?;
            }
            eprintln!("wrote {path}");
        }
        None => {
            for g in &classes {
                println!("{}", to_graph6_string(g));
            }
        }
    }

    if n <= 5 {
        let labelled = enumerate_graphs(&EnumerationSource::internal(n).connected())?.count();
        eprintln!("labelled connected graphs on {n} vertices: {labelled}");
    }
    Ok(())
}
