//! Collapse, expansion and slide moves on splitting trees, and how they
//! compose: a slide is an expansion followed by a collapse, and every
//! collapse is undone by the expansion recorded in its receipt.
//!
//! ```bash
//! cargo run -p defspace --example deformation_moves
//! ```

use defspace::graph::{DefiningGraph, VertexSet};
use defspace::moves::{collapse_with_receipt, collapsible_edges, expand, slide, tree_status, Move};
use defspace::splitting::SplittingTree;

fn show(t: &SplittingTree, title: &str) {
    println!("{title}:");
    for e in t.edges() {
        println!(
            "  {{{}}} -[{{{}}}]- {{{}}}",
            t.label_names(t.node_label(e.a)).join(","),
            t.label_names(e.label).join(","),
            t.label_names(t.node_label(e.b)).join(","),
        );
    }
    let st = tree_status(t);
    println!("  reduced: {}, surviving: {}\n", st.reduced, st.surviving);
}

fn main() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/star3_3.adg"))
            .unwrap();
    let g = DefiningGraph::parse(&text).unwrap();
    let v = |n: &str| g.vertex(n).unwrap();
    let set = |names: &[&str]| -> VertexSet { names.iter().map(|n| v(n)).collect() };

    // Star-shaped tree: a cyclic hub {c} carrying the three dihedral chunks.
    let hub = set(&["c"]);
    let star = SplittingTree::new(
        g.clone(),
        vec![hub, set(&["c", "x"]), set(&["c", "y"]), set(&["c", "z"])],
        vec![(0, 1, hub), (0, 2, hub), (0, 3, hub)],
    )
    .unwrap();
    show(&star, "star tree (hub {c})");

    // Collapse any hub edge: the chunk at its far end absorbs the hub.
    let e = collapsible_edges(&star)[0];
    let (path, receipt) = collapse_with_receipt(&star, e).unwrap();
    show(&path, "after collapsing one hub edge");

    // The receipt is the expansion that restores the star.
    if let Move::Expand {
        node,
        label,
        transfer,
    } = receipt
    {
        let back = expand(&path, node, label, &transfer).unwrap();
        println!(
            "expand undoes collapse: {}\n",
            back.canonical_code() == star.canonical_code()
        );
    }

    // Slide one outer edge across the other: the middle chunk changes.
    let slid = slide(&path, 0, 1).unwrap();
    show(&slid, "after sliding edge 0 along edge 1");
}
