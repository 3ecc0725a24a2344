//! Defining graphs: finite labeled simplicial graphs with integer
//! coefficients `m >= 2` on the edges.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex of a [`DefiningGraph`], identified by its position in the
/// lexicographically sorted list of vertex names.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(u32);

impl Vertex {
    pub(crate) fn new(index: usize) -> Self {
        Vertex(index as u32)
    }

    /// Build a vertex from its index in the sorted name list. Only
    /// meaningful for the graph the index came from.
    pub fn from_index(index: usize) -> Self {
        Vertex(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of the vertices of a defining graph, stored as a bitmask.
/// Graphs are capped at 64 vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v.0)
    }

    pub fn pair(u: Vertex, v: Vertex) -> Self {
        VertexSet(1 << u.0 | 1 << v.0)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v.0;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v.0);
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v.0 & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(Vertex(i))
            }
        })
    }

    pub fn min_vertex(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(Vertex(self.0.trailing_zeros()))
        }
    }

    /// Compare two sets as ascending index sequences, lexicographically.
    /// Since vertex indices follow name order, this is the name-list order
    /// used for every deterministic tie-break in the crate.
    pub fn cmp_lex(self, other: VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.index())?;
        }
        write!(f, "}}")
    }
}

/// Structural classification flags of a defining graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub connected: bool,
    /// All labels at least 3.
    pub large_type: bool,
    /// All labels at least 6.
    pub xxxl: bool,
    /// No three edges form a triangle.
    pub triangle_free: bool,
    /// A single vertex, or two vertices joined by an edge.
    pub spherical: bool,
    /// Exactly one edge, carrying an even label.
    pub even_dihedral: bool,
    /// Chunk rigidity is established for triangle-free and XXXL graphs.
    pub rigid_chunks_proven: bool,
}

/// A labeled simplicial graph: the input presentation for everything else
/// in this crate. Immutable after construction; all invariants (no loops,
/// no duplicate edges, labels >= 2, identifiers from `[A-Za-z0-9_]+`) are
/// enforced by the constructors.
#[derive(Clone, PartialEq, Eq)]
pub struct DefiningGraph {
    names: Vec<String>,
    labels: BTreeMap<(Vertex, Vertex), u32>,
    adjacency: Vec<VertexSet>,
}

impl fmt::Debug for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DefiningGraph({})", self.to_adg().replace('\n', "; "))
    }
}

fn valid_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DefiningGraph {
    /// Build a graph from explicit parts. Vertex names are sorted; edges are
    /// given by name with their coefficient.
    pub fn from_parts<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u32)]) -> Result<Self> {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for v in vertices {
            names.insert(v.as_ref().to_string());
        }
        for (u, v, _) in edges {
            names.insert(u.as_ref().to_string());
            names.insert(v.as_ref().to_string());
        }
        let names: Vec<String> = names.into_iter().collect();
        if names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if names.len() > 64 {
            return Err(Error::Parse {
                line: 0,
                message: "graphs are limited to 64 vertices".into(),
            });
        }
        for n in &names {
            if !valid_identifier(n) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid identifier `{n}`"),
                });
            }
        }
        let index: BTreeMap<&str, Vertex> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), Vertex::new(i)))
            .collect();
        let mut labels = BTreeMap::new();
        for (u, v, m) in edges {
            let a = index[u.as_ref()];
            let b = index[v.as_ref()];
            if a == b {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("loop edge at `{}`", u.as_ref()),
                });
            }
            if *m < 2 {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("label must be at least 2, got {m}"),
                });
            }
            let key = (a.min(b), a.max(b));
            if labels.insert(key, *m).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate edge {} {}", u.as_ref(), v.as_ref()),
                });
            }
        }
        Ok(Self::assemble(names, labels))
    }

    fn assemble(names: Vec<String>, labels: BTreeMap<(Vertex, Vertex), u32>) -> Self {
        let mut adjacency = vec![VertexSet::EMPTY; names.len()];
        for &(u, v) in labels.keys() {
            adjacency[u.index()].insert(v);
            adjacency[v.index()].insert(u);
        }
        DefiningGraph {
            names,
            labels,
            adjacency,
        }
    }

    /// Parse the line-oriented `.adg` format.
    ///
    /// `#` starts a comment, `vertex <id>` declares an isolated vertex, and
    /// `edge <u> <v> <m>` declares an edge with coefficient `m >= 2`,
    /// implicitly declaring `u` and `v`. Re-declaring a known vertex or edge
    /// is an error, as is an empty graph.
    pub fn parse(text: &str) -> Result<Self> {
        let mut known: BTreeSet<String> = BTreeSet::new();
        let mut edges: Vec<(String, String, u32)> = Vec::new();
        let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks[0] {
                "vertex" => {
                    if toks.len() != 2 {
                        return Err(Error::Parse {
                            line,
                            message: "expected `vertex <id>`".into(),
                        });
                    }
                    let id = toks[1];
                    if !valid_identifier(id) {
                        return Err(Error::Parse {
                            line,
                            message: format!("invalid identifier `{id}`"),
                        });
                    }
                    if !known.insert(id.to_string()) {
                        return Err(Error::Parse {
                            line,
                            message: format!("duplicate vertex declaration `{id}`"),
                        });
                    }
                }
                "edge" => {
                    if toks.len() != 4 {
                        return Err(Error::Parse {
                            line,
                            message: "expected `edge <u> <v> <m>`".into(),
                        });
                    }
                    let (u, v) = (toks[1], toks[2]);
                    for id in [u, v] {
                        if !valid_identifier(id) {
                            return Err(Error::Parse {
                                line,
                                message: format!("invalid identifier `{id}`"),
                            });
                        }
                    }
                    let m: u32 = toks[3].parse().map_err(|_| Error::Parse {
                        line,
                        message: format!("invalid coefficient `{}`", toks[3]),
                    })?;
                    if u == v {
                        return Err(Error::Parse {
                            line,
                            message: format!("loop edge at `{u}`"),
                        });
                    }
                    if m < 2 {
                        return Err(Error::Parse {
                            line,
                            message: format!("label must be at least 2, got {m}"),
                        });
                    }
                    let key = if u < v {
                        (u.into(), v.into())
                    } else {
                        (v.into(), u.into())
                    };
                    if !pairs.insert(key) {
                        return Err(Error::Parse {
                            line,
                            message: format!("duplicate edge {u} {v}"),
                        });
                    }
                    known.insert(u.to_string());
                    known.insert(v.to_string());
                    edges.push((u.to_string(), v.to_string(), m));
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown directive `{other}`"),
                    });
                }
            }
        }
        if known.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let vertices: Vec<String> = known.into_iter().collect();
        Self::from_parts(&vertices, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(Vertex::new)
    }

    pub fn full_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(Vertex::new)
    }

    pub fn require_vertex(&self, name: &str) -> Result<Vertex> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        self.labels.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn label(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.label(u, v).is_some()
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v.index()]
    }

    /// Connected components of the subgraph induced on `within`, sorted by
    /// their least vertex. The empty set has no components.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.min_vertex() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for u in self.neighbors(v).intersection(within).iter() {
                    if !comp.contains(u) {
                        comp.insert(u);
                        frontier.push(u);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Whether the induced subgraph on `within` is connected.
    /// The empty subgraph counts as connected.
    pub fn connected_within(&self, within: VertexSet) -> bool {
        match within.min_vertex() {
            None => true,
            Some(start) => {
                let mut comp = VertexSet::singleton(start);
                let mut frontier = vec![start];
                while let Some(v) = frontier.pop() {
                    for u in self.neighbors(v).intersection(within).iter() {
                        if !comp.contains(u) {
                            comp.insert(u);
                            frontier.push(u);
                        }
                    }
                }
                comp == within
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(self.full_set())
    }

    fn has_triangle(&self) -> bool {
        self.labels
            .keys()
            .any(|&(u, v)| !self.neighbors(u).intersection(self.neighbors(v)).is_empty())
    }

    pub fn classify(&self) -> ClassFlags {
        let large_type = self.edges().all(|(_, _, m)| m >= 3);
        let xxxl = self.edges().all(|(_, _, m)| m >= 6);
        let triangle_free = !self.has_triangle();
        let n = self.vertex_count();
        let e = self.edge_count();
        let spherical = n == 1 || (n == 2 && e == 1);
        let even_dihedral =
            n == 2 && e == 1 && self.edges().next().is_some_and(|(_, _, m)| m % 2 == 0);
        ClassFlags {
            connected: self.is_connected(),
            large_type,
            xxxl,
            triangle_free,
            spherical,
            even_dihedral,
            rigid_chunks_proven: triangle_free || xxxl,
        }
    }

    /// Vertices reachable from `s` along edges with odd labels, `s` included.
    pub fn odd_reachable(&self, s: Vertex) -> VertexSet {
        assert!(s.index() < self.vertex_count(), "vertex out of range");
        self.odd_reachable_within(s, self.full_set())
    }

    /// Odd reachability restricted to the subgraph induced on `within`.
    pub fn odd_reachable_within(&self, s: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = vec![s];
        while let Some(v) = frontier.pop() {
            for u in self.neighbors(v).intersection(within).iter() {
                if !seen.contains(u) && self.label(v, u).is_some_and(|m| m % 2 == 1) {
                    seen.insert(u);
                    frontier.push(u);
                }
            }
        }
        seen
    }

    /// The subgraph induced on `within`, as a graph in its own right.
    pub fn induced(&self, within: VertexSet) -> DefiningGraph {
        let names: Vec<String> = within
            .iter()
            .map(|v| self.names[v.index()].clone())
            .collect();
        let old: Vec<Vertex> = within.iter().collect();
        let position: BTreeMap<Vertex, Vertex> = old
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, Vertex::new(i)))
            .collect();
        let mut labels = BTreeMap::new();
        for (&(u, v), &m) in &self.labels {
            if within.contains(u) && within.contains(v) {
                labels.insert((position[&u], position[&v]), m);
            }
        }
        Self::assemble(names, labels)
    }

    /// Replace the edge set, keeping the vertex names. Internal: used by
    /// twist moves, which re-attach edges without touching vertices.
    pub(crate) fn with_labels(&self, labels: BTreeMap<(Vertex, Vertex), u32>) -> DefiningGraph {
        debug_assert!(labels.keys().all(|&(u, v)| u < v));
        Self::assemble(self.names.clone(), labels)
    }

    pub(crate) fn labels_map(&self) -> &BTreeMap<(Vertex, Vertex), u32> {
        &self.labels
    }

    /// Human/machine-readable names of a vertex set, in index order.
    pub fn set_names(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v.index()].clone()).collect()
    }

    /// Serialize back to the `.adg` format, deterministically.
    pub fn to_adg(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if self.neighbors(v).is_empty() {
                out.push_str(&format!("vertex {}\n", self.name(v)));
            }
        }
        for (u, v, m) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", self.name(u), self.name(v), m));
        }
        out
    }
}
