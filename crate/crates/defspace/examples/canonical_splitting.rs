//! Build the canonical splitting tree of a defining graph: one node per
//! chunk, joined over shared edges first, then shared vertices.
//!
//! ```bash
//! cargo run -p defspace --example canonical_splitting
//! ```

use defspace::graph::DefiningGraph;
use defspace::splitting::{canonical_chunk_tree, enumerate_canonical_trees};

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1_7.adg"))
        .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();

    let t = canonical_chunk_tree(&g).unwrap();
    println!("canonical tree ({} nodes):", t.node_count());
    for e in t.edges() {
        println!(
            "  {{{}}} -[{{{}}}]- {{{}}}",
            t.label_names(t.node_label(e.a)).join(","),
            t.label_names(e.label).join(","),
            t.label_names(t.node_label(e.b)).join(","),
        );
    }

    let verdict = t.validate();
    println!(
        "\nvalid splitting: {}, valid chunk tree: {}",
        verdict.valid_splitting, verdict.valid_chunk_tree
    );

    // The joining order is not unique: the pendant chunks can attach to any
    // chunk containing the shared vertex q.
    let variants = enumerate_canonical_trees(&g).unwrap();
    println!(
        "\n{} construction outcomes, up to isomorphism:",
        variants.len()
    );
    for v in &variants {
        let code = v.canonical_code().to_hex();
        println!("  {}", &code[..24.min(code.len())]);
    }
}
