//! Separating simplices and the chunk decomposition.
//!
//! A chunk is a maximal vertex subset whose induced subgraph is connected
//! and has no separating vertex and no separating edge (removal convention:
//! deleting a simplex deletes its vertices and everything incident; an empty
//! remainder counts as connected). For a graph with at least one edge every
//! chunk has at least two vertices: a single vertex always extends to an
//! incident edge, so maximality rules bare vertices out.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, Vertex, VertexSet};

/// A vertex or an edge of a defining graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplex {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

impl Simplex {
    fn vertices(self) -> VertexSet {
        match self {
            Simplex::Vertex(v) => VertexSet::singleton(v),
            Simplex::Edge(u, v) => VertexSet::pair(u, v),
        }
    }
}

/// Whether removing the open star of `simplex` disconnects the graph.
/// Equivalently: the subgraph induced on the remaining vertices has at
/// least two connected components.
pub fn is_separating(g: &DefiningGraph, simplex: Simplex) -> Result<bool> {
    match simplex {
        Simplex::Vertex(v) => {
            if v.index() >= g.vertex_count() {
                return Err(Error::UnknownSimplex(format!("vertex #{}", v.index())));
            }
        }
        Simplex::Edge(u, v) => {
            if !g.has_edge(u, v) {
                return Err(Error::UnknownSimplex(format!(
                    "edge #{}-#{}",
                    u.index(),
                    v.index()
                )));
            }
        }
    }
    let rest = g.full_set().difference(simplex.vertices());
    Ok(g.components_within(rest).len() >= 2)
}

/// Shared memo of induced-connectivity queries for the brute-force search.
struct ConnCache<'g> {
    g: &'g DefiningGraph,
    memo: BTreeMap<VertexSet, bool>,
}

impl<'g> ConnCache<'g> {
    fn new(g: &'g DefiningGraph) -> Self {
        ConnCache {
            g,
            memo: BTreeMap::new(),
        }
    }

    fn connected(&mut self, s: VertexSet) -> bool {
        if let Some(&c) = self.memo.get(&s) {
            return c;
        }
        let c = self.g.connected_within(s);
        self.memo.insert(s, c);
        c
    }
}

/// Whether the induced subgraph on `s` is connected with no internally
/// separating vertex or edge.
fn chunk_check(cache: &mut ConnCache<'_>, s: VertexSet) -> bool {
    if !cache.connected(s) {
        return false;
    }
    for v in s.iter() {
        let mut rest = s;
        rest.remove(v);
        if !cache.connected(rest) {
            return false;
        }
    }
    for u in s.iter() {
        for v in cache.g.neighbors(u).intersection(s).iter() {
            if v <= u {
                continue;
            }
            let rest = s.difference(VertexSet::pair(u, v));
            if !cache.connected(rest) {
                return false;
            }
        }
    }
    true
}

/// The chunk decomposition of a connected graph, sorted by the canonical
/// (lexicographic member-list) order.
///
/// Brute force over all vertex subsets with memoized connectivity queries;
/// the candidates that pass are filtered down to the inclusion-maximal ones.
pub fn chunks(g: &DefiningGraph) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n > 24 {
        // the subset search is exponential in the vertex count
        return Err(Error::TooLarge {
            vertices: n,
            max: 24,
        });
    }
    let mut cache = ConnCache::new(g);
    let mut passing: Vec<VertexSet> = Vec::new();
    for mask in 1u64..(1 << n) {
        let s: VertexSet = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(Vertex::new)
            .collect();
        if chunk_check(&mut cache, s) {
            passing.push(s);
        }
    }
    let mut maximal: Vec<VertexSet> = passing
        .iter()
        .copied()
        .filter(|&s| !passing.iter().any(|&t| t != s && s.is_subset(t)))
        .collect();
    maximal.sort_by(|a, b| a.cmp_lex(*b));
    Ok(maximal)
}

/// Sorted multiset of canonical codes of the chunks' induced subgraphs.
/// Twist moves must preserve this multiset.
pub fn chunk_code_multiset(g: &DefiningGraph) -> Result<Vec<crate::canon::CanonicalCode>> {
    let mut codes: Vec<_> = chunks(g)?
        .into_iter()
        .map(|c| g.induced(c).canonical_code())
        .collect();
    codes.sort();
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> DefiningGraph {
        DefiningGraph::parse(s).unwrap()
    }

    fn set(g: &DefiningGraph, names: &[&str]) -> VertexSet {
        names.iter().map(|n| g.vertex(n).unwrap()).collect()
    }

    #[test]
    fn triangle_has_no_cut_vertex() {
        let g = parse("edge a b 3\nedge b c 3\nedge a c 3");
        let a = g.vertex("a").unwrap();
        assert!(!is_separating(&g, Simplex::Vertex(a)).unwrap());
        assert_eq!(chunks(&g).unwrap(), vec![g.full_set()]);
    }

    #[test]
    fn path_cut_point() {
        let g = parse("edge a b 3\nedge b c 3");
        let b = g.vertex("b").unwrap();
        assert!(is_separating(&g, Simplex::Vertex(b)).unwrap());
        assert_eq!(
            chunks(&g).unwrap(),
            vec![set(&g, &["a", "b"]), set(&g, &["b", "c"])]
        );
    }

    #[test]
    fn fig1_shared_edge_separates() {
        let g = parse(
            "edge p q 7\nedge p r 7\nedge q r 7\nedge p s 7\nedge q s 7\nedge q y 7\nedge q g 7",
        );
        let (p, q) = (g.vertex("p").unwrap(), g.vertex("q").unwrap());
        assert!(is_separating(&g, Simplex::Edge(p, q)).unwrap());
        assert_eq!(
            chunks(&g).unwrap(),
            vec![
                set(&g, &["g", "q"]),
                set(&g, &["p", "q", "r"]),
                set(&g, &["p", "q", "s"]),
                set(&g, &["q", "y"]),
            ]
        );
    }

    #[test]
    fn single_edge_graph_is_one_chunk() {
        let g = parse("edge a b 4");
        assert_eq!(chunks(&g).unwrap(), vec![g.full_set()]);
    }

    #[test]
    fn single_vertex_graph_is_one_chunk() {
        let g = parse("vertex a");
        assert_eq!(chunks(&g).unwrap(), vec![g.full_set()]);
    }

    #[test]
    fn disconnected_input_rejected() {
        let g = parse("edge a b 3\nedge c d 3");
        assert!(matches!(chunks(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn missing_simplex_rejected() {
        let g = parse("edge a b 3\nedge b c 3");
        let (a, c) = (g.vertex("a").unwrap(), g.vertex("c").unwrap());
        assert!(is_separating(&g, Simplex::Edge(a, c)).is_err());
    }
}
