//! Write DOT renderings: the chunk-colored defining graph, the canonical
//! splitting tree, the spine and the twist orbit.
//!
//! ```bash
//! cargo run -p defspace --example dot_export
//! dot -Tpng /tmp/defspace_chunks.dot -o chunks.png   # if graphviz is around
//! ```

use defspace::chunks::chunks;
use defspace::dot;
use defspace::graph::DefiningGraph;
use defspace::moves::{spine, EnumerationLimits};
use defspace::splitting::canonical_chunk_tree;
use defspace::twist::twist_orbit;

fn main() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1_7.adg"))
        .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();

    let colored = dot::chunk_dot(&g, &chunks(&g).unwrap());
    std::fs::write("/tmp/defspace_chunks.dot", &colored).unwrap();
    println!("wrote /tmp/defspace_chunks.dot:\n{colored}");

    let t = canonical_chunk_tree(&g).unwrap();
    std::fs::write("/tmp/defspace_tree.dot", dot::tree_dot(&t)).unwrap();
    println!("wrote /tmp/defspace_tree.dot");

    let report = spine(&g, &EnumerationLimits::default()).unwrap();
    std::fs::write("/tmp/defspace_spine.dot", dot::spine_dot(&report)).unwrap();
    println!("wrote /tmp/defspace_spine.dot");

    let star = DefiningGraph::parse(
        &std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/star4_3.adg"))
            .unwrap(),
    )
    .unwrap();
    let orbit = twist_orbit(&star, 10_000).unwrap();
    std::fs::write("/tmp/defspace_orbit.dot", dot::orbit_dot(&orbit)).unwrap();
    println!("wrote /tmp/defspace_orbit.dot");
}
