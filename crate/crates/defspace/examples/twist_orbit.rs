//! Enumerate the defining graphs reachable by twist moves: re-attaching a
//! branch of a separating vertex to a target joined by an odd-labeled path.
//! These moves change the graph but not the group it presents.
//!
//! ```bash
//! cargo run -p defspace --example twist_orbit
//! ```

use defspace::graph::DefiningGraph;
use defspace::twist::{twist_moves, twist_orbit};

fn main() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/star4_3.adg"))
            .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();

    println!(
        "{} twist moves available on the 4-star",
        twist_moves(&g).len()
    );

    let orbit = twist_orbit(&g, 10_000).unwrap();
    println!(
        "\norbit: {} graphs (truncated: {})\n",
        orbit.members.len(),
        orbit.truncated
    );
    for (i, m) in orbit.members.iter().enumerate() {
        println!("member {i}:\n{}", m.graph.to_adg());
    }

    println!("discovered moves:");
    for e in &orbit.edges {
        println!(
            "  {} -> {}: branch of `{}` re-attached to `{}` (odd path {})",
            e.from,
            e.to,
            e.source,
            e.target,
            e.odd_path.join("-")
        );
    }

    // With only even labels there is no odd path, hence no move at all.
    let rigid = DefiningGraph::parse("edge a b 4\nedge b c 4").unwrap();
    let orbit = twist_orbit(&rigid, 10_000).unwrap();
    println!("\neven path orbit size: {}", orbit.members.len());
}
