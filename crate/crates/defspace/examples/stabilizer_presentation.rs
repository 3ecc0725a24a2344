//! The twist group stabilizing a reduced chunk tree, presented as a RAAG:
//! a direct product of edge-centralizer factors modulo diagonal centers.
//! Over trees whose chunks are all single edges the result is free abelian
//! of a computable rank; bigger chunks contribute symbolic free factors.
//!
//! ```bash
//! cargo run -p defspace --example stabilizer_presentation
//! ```

use defspace::graph::DefiningGraph;
use defspace::splitting::canonical_chunk_tree;
use defspace::twist::{out_dihedral, stabilizer_presentation};

fn show(path: &str) {
    let text = std::fs::read_to_string(path).unwrap();
    let g = DefiningGraph::parse(&text).unwrap();
    let t = canonical_chunk_tree(&g).unwrap();
    let p = stabilizer_presentation(&g, &t).unwrap();

    println!("== {path}");
    println!("generators:");
    for gen in &p.generators {
        println!("  {} ({})", gen.name, gen.factor.as_str());
    }
    println!("identifications applied: {}", p.identifications.len());
    match p.free_abelian_rank {
        Some(r) => println!("exact: free abelian of rank {r}\n"),
        None => println!(
            "inexact: {} symbolic free factor(s), centers suppressed for {} chunk(s)\n",
            p.generators
                .iter()
                .filter(|g| g.factor.as_str() == "symbolic-free")
                .count(),
            p.suppressed_centers.len()
        ),
    }
}

fn main() {
    show(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/p3_33.adg"));
    show(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/fig1_7.adg"));

    // The building block behind the central generators: the outer
    // automorphism type of a single labeled edge.
    for m in [3, 4, 7] {
        println!(
            "out(dihedral, m={m}): {}",
            out_dihedral(m).unwrap().group_description()
        );
    }
}
