//! Decompose a defining graph into chunks: the maximal induced subgraphs
//! with no separating vertex or edge.
//!
//! ```bash
//! cargo run -p defspace --example chunk_decomposition
//! ```

use defspace::chunks::{chunks, is_separating, Simplex};
use defspace::graph::DefiningGraph;

fn main() {
    // Two triangles glued along p-q, with two pendant edges at q.
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1_7.adg"))
        .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();

    println!("flags: {:?}\n", g.classify());

    let decomposition = chunks(&g).unwrap();
    println!("{} chunks:", decomposition.len());
    for c in &decomposition {
        println!("  {{{}}}", g.set_names(*c).join(","));
    }

    // The glued edge separates the two pendant vertices from the rest.
    let (p, q) = (g.vertex("p").unwrap(), g.vertex("q").unwrap());
    println!(
        "\nedge p-q separating: {}",
        is_separating(&g, Simplex::Edge(p, q)).unwrap()
    );
    let r = g.vertex("r").unwrap();
    println!(
        "vertex r separating: {}",
        is_separating(&g, Simplex::Vertex(r)).unwrap()
    );
}
