//! DOT (graphviz) renderings of graphs, chunk colorings, splitting trees
//! and spine graphs.

use crate::graph::{DefiningGraph, VertexSet};
use crate::moves::SpineReport;
use crate::splitting::SplittingTree;
use crate::twist::TwistOrbit;

const PALETTE: [&str; 8] = [
    "red",
    "blue",
    "gold",
    "green",
    "orange",
    "turquoise",
    "magenta",
    "brown",
];

/// The defining graph with each edge colored by its chunk; edges shared by
/// two chunks are purple.
pub fn chunk_dot(g: &DefiningGraph, chunks: &[VertexSet]) -> String {
    let mut out = String::from("graph chunks {\n  node [shape=circle];\n");
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", g.name(v)));
    }
    for (u, v, m) in g.edges() {
        let pair = VertexSet::pair(u, v);
        let owners: Vec<usize> = chunks
            .iter()
            .enumerate()
            .filter(|(_, c)| pair.is_subset(**c))
            .map(|(i, _)| i)
            .collect();
        let color = match owners.as_slice() {
            [i] => PALETTE[i % PALETTE.len()],
            [] => "black",
            _ => "purple",
        };
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\", color={}];\n",
            g.name(u),
            g.name(v),
            m,
            color
        ));
    }
    out.push_str("}\n");
    out
}

fn label_text(t: &SplittingTree, s: VertexSet) -> String {
    t.label_names(s).join(",")
}

/// A splitting tree with node and edge labels.
pub fn tree_dot(t: &SplittingTree) -> String {
    let mut out = String::from("graph tree {\n  node [shape=box];\n");
    for v in 0..t.node_count() {
        out.push_str(&format!(
            "  n{} [label=\"{{{}}}\"];\n",
            v,
            label_text(t, t.node_label(v))
        ));
    }
    for e in t.edges() {
        out.push_str(&format!(
            "  n{} -- n{} [label=\"{{{}}}\"];\n",
            e.a,
            e.b,
            label_text(t, e.label)
        ));
    }
    out.push_str("}\n");
    out
}

/// Slide graph (solid, between reduced classes) and collapse order (dashed
/// arrows) in one picture. Reduced classes are double circles.
pub fn spine_dot(report: &SpineReport) -> String {
    let mut out = String::from("digraph spine {\n");
    for (i, class) in report.classes.iter().enumerate() {
        let shape = if class.status.reduced {
            "doublecircle"
        } else if class.status.surviving {
            "circle"
        } else {
            "plaintext"
        };
        out.push_str(&format!(
            "  c{} [shape={}, label=\"{} nodes\\n{}\"];\n",
            i,
            shape,
            class.tree.node_count(),
            &class.code.to_hex()[..12.min(class.code.to_hex().len())]
        ));
    }
    for &(a, b) in &report.slide_edges {
        out.push_str(&format!("  c{a} -> c{b} [dir=none];\n"));
    }
    for &(a, b) in &report.collapse_edges {
        out.push_str(&format!("  c{a} -> c{b} [style=dashed];\n"));
    }
    out.push_str("}\n");
    out
}

/// The orbit graph of twist-equivalent defining graphs.
pub fn orbit_dot(orbit: &TwistOrbit) -> String {
    let mut out = String::from("digraph orbit {\n  node [shape=box];\n");
    for (i, m) in orbit.members.iter().enumerate() {
        out.push_str(&format!(
            "  g{} [label=\"{}\"];\n",
            i,
            m.graph.to_adg().trim_end().replace('\n', "\\n")
        ));
    }
    for e in &orbit.edges {
        out.push_str(&format!(
            "  g{} -> g{} [label=\"{}~{}\"];\n",
            e.from, e.to, e.source, e.target
        ));
    }
    out.push_str("}\n");
    out
}
