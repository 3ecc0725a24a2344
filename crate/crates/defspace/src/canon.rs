//! Canonical codes for labeled graphs, invariant under label-preserving
//! isomorphism. Used to deduplicate graphs and trees throughout the crate.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{DefiningGraph, Vertex};

/// A byte string that is equal for two graphs (or two labeled trees over the
/// same base) exactly when they are isomorphic as labeled objects.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub(crate) fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl DefiningGraph {
    /// Canonical code of the labeled graph.
    ///
    /// Up to 8 vertices the minimum encoding over all vertex orderings is
    /// taken, so equal codes are exactly label-preserving isomorphism.
    /// Larger graphs are first partitioned by iterative refinement on
    /// (degree, incident labels, neighbor colors) and the minimum is taken
    /// over orderings compatible with the partition.
    pub fn canonical_code(&self) -> CanonicalCode {
        let n = self.vertex_count();
        let cells: Vec<Vec<Vertex>> = if n <= 8 {
            vec![self.vertices().collect()]
        } else {
            refinement_cells(self)
        };
        CanonicalCode(min_code(self, &cells))
    }
}

/// Encoding layout: one byte for the vertex count, then for each position
/// `j = 1..n` the labels toward all earlier positions `i < j` as big-endian
/// u32 (0 for a non-edge). Placing vertices one position at a time thus
/// extends the byte string monotonically, which enables pruning.
fn min_code(g: &DefiningGraph, cells: &[Vec<Vertex>]) -> Vec<u8> {
    let n = g.vertex_count();
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut buf = vec![n as u8];
    let mut best: Option<Vec<u8>> = None;
    place(g, cells, 0u64, &mut order, &mut buf, &mut best);
    best.expect("at least one ordering")
}

fn place(
    g: &DefiningGraph,
    cells: &[Vec<Vertex>],
    used: u64,
    order: &mut Vec<Vertex>,
    buf: &mut Vec<u8>,
    best: &mut Option<Vec<u8>>,
) {
    let cell = cells
        .iter()
        .find(|c| c.iter().any(|v| used >> v.index() & 1 == 0));
    let cell = match cell {
        Some(c) => c,
        None => {
            match best {
                Some(b) if buf.as_slice() >= b.as_slice() => {}
                _ => *best = Some(buf.clone()),
            }
            return;
        }
    };
    for &v in cell {
        if used >> v.index() & 1 == 1 {
            continue;
        }
        let start = buf.len();
        for &u in order.iter() {
            let m = g.label(u, v).unwrap_or(0);
            buf.extend_from_slice(&m.to_be_bytes());
        }
        let viable = match best {
            None => true,
            Some(b) => buf.as_slice() <= &b[..buf.len()],
        };
        if viable {
            order.push(v);
            place(g, cells, used | 1 << v.index(), order, buf, best);
            order.pop();
        }
        buf.truncate(start);
    }
}

/// Iterative refinement by (degree, incident-label multiset), then by
/// neighbor colors, until the partition stabilizes. Cell order is derived
/// from the color values, so it is isomorphism-invariant.
fn refinement_cells(g: &DefiningGraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let initial: Vec<Vec<u32>> = g
        .vertices()
        .map(|v| {
            let mut sig = vec![g.neighbors(v).len() as u32];
            let mut labels: Vec<u32> = g
                .neighbors(v)
                .iter()
                .map(|u| g.label(v, u).unwrap())
                .collect();
            labels.sort_unstable();
            sig.extend(labels);
            sig
        })
        .collect();
    let mut color = rank_signatures(&initial);
    loop {
        let sigs: Vec<Vec<u32>> = g
            .vertices()
            .map(|v| {
                let mut sig = vec![color[v.index()]];
                let mut nb: Vec<(u32, u32)> = g
                    .neighbors(v)
                    .iter()
                    .map(|u| (g.label(v, u).unwrap(), color[u.index()]))
                    .collect();
                nb.sort_unstable();
                for (m, c) in nb {
                    sig.push(m);
                    sig.push(c);
                }
                sig
            })
            .collect();
        let next = rank_signatures(&sigs);
        if next == color {
            break;
        }
        color = next;
    }
    let mut cells: BTreeMap<u32, Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        cells.entry(color[v.index()]).or_default().push(v);
    }
    let _ = n;
    cells.into_values().collect()
}

fn rank_signatures(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    let rank: BTreeMap<&Vec<u32>, u32> = sorted
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    sigs.iter().map(|s| rank[s]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> DefiningGraph {
        DefiningGraph::parse(s).unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        let g1 = parse("edge a b 3\nedge b c 3");
        let g2 = parse("edge x y 3\nedge y z 3");
        assert_eq!(g1.canonical_code(), g2.canonical_code());
    }

    #[test]
    fn distinguishes_shapes() {
        let path = parse("edge a b 3\nedge b c 3");
        let star = parse("edge c x 3\nedge c y 3\nedge c z 3");
        assert_ne!(path.canonical_code(), star.canonical_code());
    }

    #[test]
    fn path_label_reversal_is_isomorphic() {
        let g1 = parse("edge a b 3\nedge b c 4");
        let g2 = parse("edge a b 4\nedge b c 3");
        assert_eq!(g1.canonical_code(), g2.canonical_code());
    }

    #[test]
    fn distinguishes_labels() {
        let g1 = parse("edge a b 3\nedge b c 3");
        let g2 = parse("edge a b 3\nedge b c 4");
        assert_ne!(g1.canonical_code(), g2.canonical_code());
    }

    #[test]
    fn large_graph_refinement_path() {
        // 10 vertices forces the refinement code path.
        let mut lines = Vec::new();
        for i in 0..9 {
            lines.push(format!("edge v{} v{} {}", i, i + 1, 3 + (i % 3)));
        }
        let g1 = parse(&lines.join("\n"));
        let mut rev = Vec::new();
        for i in 0..9 {
            rev.push(format!("edge w{} w{} {}", 9 - i, 8 - i, 3 + (i % 3)));
        }
        let g2 = parse(&rev.join("\n"));
        assert_eq!(g1.canonical_code(), g2.canonical_code());
    }
}
