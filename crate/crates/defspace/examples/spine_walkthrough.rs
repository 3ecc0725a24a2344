//! Enumerate every chunk tree over a base graph and assemble the spine:
//! reduced and surviving classes, the slide graph and the collapse order.
//!
//! ```bash
//! cargo run -p defspace --example spine_walkthrough
//! ```

use defspace::graph::DefiningGraph;
use defspace::moves::{spine, EnumerationLimits};

fn main() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/star3_3.adg"))
            .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();

    let report = spine(&g, &EnumerationLimits::default()).unwrap();
    println!(
        "{} chunk-tree classes ({} reduced, {} surviving), dimension {}",
        report.classes.len(),
        report.reduced_indices().len(),
        report.surviving_indices().len(),
        report.dimension
    );

    for (i, class) in report.classes.iter().enumerate() {
        let labels: Vec<String> = (0..class.tree.node_count())
            .map(|v| {
                format!(
                    "{{{}}}",
                    class.tree.label_names(class.tree.node_label(v)).join(",")
                )
            })
            .collect();
        println!(
            "  class {i}: {} nodes [{}] reduced={} surviving={}",
            class.tree.node_count(),
            labels.join(" "),
            class.status.reduced,
            class.status.surviving
        );
    }

    println!("\nslide graph edges (between reduced classes):");
    for (a, b) in &report.slide_edges {
        println!("  {a} -- {b}");
    }
    println!("slide graph connected: {}", report.slide_connected);

    println!("\ncollapse order (surviving -> surviving):");
    for (a, b) in &report.collapse_edges {
        println!("  {a} -> {b}");
    }
}
