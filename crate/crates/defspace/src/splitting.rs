//! Quotient-level visual splittings: finite labeled trees whose vertices and
//! edges carry standard-parabolic labels (vertex subsets of the base graph).
//!
//! A tree passing the full battery of checks is called a *chunk tree* here:
//! exactly one node per chunk of the base, all other labels cyclic or
//! dihedral, no collapsible leaf and no degenerate valence-two node. The
//! infinite covering tree is never materialized; minimality and the
//! valence-two exclusion are expressed by their quotient-level counterparts.
//! Proper parabolic inclusions are assumed to have infinite index, which
//! holds in the large-type setting this crate targets.

use std::collections::BTreeMap;

use crate::canon::CanonicalCode;
use crate::chunks::chunks;
use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, Vertex, VertexSet};

/// Role of a parabolic label inside a chunk tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelKind {
    /// The label is a chunk of the base graph.
    Chunk,
    /// A single generator.
    Cyclic,
    /// Two generators joined by an edge of the base graph.
    Dihedral,
}

/// An edge of a splitting tree, with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub label: VertexSet,
}

impl TreeEdge {
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

/// A finite tree with parabolic labels over a fixed base graph.
#[derive(Clone)]
pub struct SplittingTree {
    base: DefiningGraph,
    base_chunks: Vec<VertexSet>,
    nodes: Vec<VertexSet>,
    edges: Vec<TreeEdge>,
}

/// One failed validation clause, pointing at the offending simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotATree,
    EdgeLabelNotContained { edge: usize },
    SupportDisconnected { generator: Vertex },
    BaseEdgeUncovered { u: Vertex, v: Vertex },
    MissingChunkNode { chunk: VertexSet },
    DuplicateChunkNode { chunk: VertexSet },
    NodeLabelKind { node: usize },
    EdgeLabelKind { edge: usize },
    CollapsibleLeaf { node: usize },
    EqualValenceTwo { node: usize },
}

/// Outcome of [`SplittingTree::validate`].
#[derive(Clone, Debug)]
pub struct Verdict {
    /// Tree shape, label containment, connected generator supports and
    /// coverage of every base edge: the tree encodes a visual splitting.
    pub valid_splitting: bool,
    /// Additionally: the chunk axiom, label kinds, no collapsible leaf,
    /// no degenerate valence-two node.
    pub valid_chunk_tree: bool,
    pub violations: Vec<Violation>,
}

impl SplittingTree {
    /// Assemble a tree from labels and edges. Structural errors (dangling
    /// references, empty labels, duplicate or loop edges, disconnected base)
    /// are rejected here; everything semantic is reported by `validate`.
    pub fn new(
        base: DefiningGraph,
        nodes: Vec<VertexSet>,
        edges: Vec<(usize, usize, VertexSet)>,
    ) -> Result<Self> {
        if !base.is_connected() {
            return Err(Error::Disconnected);
        }
        let base_chunks = chunks(&base)?;
        if nodes.is_empty() {
            return Err(Error::InvalidTree("no nodes".into()));
        }
        let full = base.full_set();
        for (i, label) in nodes.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidTree(format!("node {i} has an empty label")));
            }
            if !label.is_subset(full) {
                return Err(Error::InvalidTree(format!(
                    "node {i} references vertices outside the base graph"
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b, label) in edges {
            if a >= nodes.len() || b >= nodes.len() {
                return Err(Error::InvalidTree(format!("edge {a}-{b} is dangling")));
            }
            if a == b {
                return Err(Error::InvalidTree(format!("loop edge at node {a}")));
            }
            if label.is_empty() || !label.is_subset(full) {
                return Err(Error::InvalidTree(format!(
                    "edge {a}-{b} has an invalid label"
                )));
            }
            let (a, b) = (a.min(b), a.max(b));
            if !seen.insert((a, b)) {
                return Err(Error::InvalidTree(format!("duplicate edge {a}-{b}")));
            }
            norm.push(TreeEdge { a, b, label });
        }
        Ok(SplittingTree {
            base,
            base_chunks,
            nodes,
            edges: norm,
        })
    }

    pub(crate) fn replace_parts(
        &self,
        nodes: Vec<VertexSet>,
        edges: Vec<TreeEdge>,
    ) -> SplittingTree {
        SplittingTree {
            base: self.base.clone(),
            base_chunks: self.base_chunks.clone(),
            nodes,
            edges,
        }
    }

    pub fn base(&self) -> &DefiningGraph {
        &self.base
    }

    pub fn base_chunks(&self) -> &[VertexSet] {
        &self.base_chunks
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_label(&self, v: usize) -> VertexSet {
        self.nodes[v]
    }

    pub fn node_labels(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].touches(v))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    fn is_chunk_label(&self, s: VertexSet) -> bool {
        self.base_chunks.contains(&s)
    }

    /// Kind of an arbitrary label over this base: chunks take precedence,
    /// then singletons, then edge pairs. `None` for anything else.
    pub fn label_kind(&self, s: VertexSet) -> Option<LabelKind> {
        if self.is_chunk_label(s) {
            Some(LabelKind::Chunk)
        } else if s.len() == 1 {
            Some(LabelKind::Cyclic)
        } else if s.len() == 2 {
            let mut it = s.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            if self.base.has_edge(u, v) {
                Some(LabelKind::Dihedral)
            } else {
                None
            }
        } else {
            None
        }
    }

    fn is_tree_shape(&self) -> bool {
        if self.edges.len() + 1 != self.nodes.len() {
            return false;
        }
        // connectivity over nodes
        let n = self.nodes.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if e.touches(v) {
                    let w = e.other(v);
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
        }
        count == n
    }

    /// Check the visual-splitting axioms and the chunk-tree axioms, and
    /// report every failed clause.
    pub fn validate(&self) -> Verdict {
        let mut violations = Vec::new();

        let tree_ok = self.is_tree_shape();
        if !tree_ok {
            violations.push(Violation::NotATree);
        }

        for (i, e) in self.edges.iter().enumerate() {
            let both = self.nodes[e.a].intersection(self.nodes[e.b]);
            if !e.label.is_subset(both) {
                violations.push(Violation::EdgeLabelNotContained { edge: i });
            }
        }

        for s in self.base.vertices() {
            if !self.support_connected(s) {
                violations.push(Violation::SupportDisconnected { generator: s });
            }
        }

        for (u, v, _) in self.base.edges() {
            let pair = VertexSet::pair(u, v);
            if !self.nodes.iter().any(|n| pair.is_subset(*n)) {
                violations.push(Violation::BaseEdgeUncovered { u, v });
            }
        }

        let splitting_ok = violations.is_empty();

        for &c in &self.base_chunks {
            match self.nodes.iter().filter(|&&n| n == c).count() {
                0 => violations.push(Violation::MissingChunkNode { chunk: c }),
                1 => {}
                _ => violations.push(Violation::DuplicateChunkNode { chunk: c }),
            }
        }
        for (i, &n) in self.nodes.iter().enumerate() {
            match self.label_kind(n) {
                Some(_) => {}
                None => violations.push(Violation::NodeLabelKind { node: i }),
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            match self.label_kind(e.label) {
                Some(LabelKind::Cyclic) | Some(LabelKind::Dihedral) => {}
                // a dihedral chunk is still a legitimate edge label shape
                Some(LabelKind::Chunk) if e.label.len() <= 2 => {}
                _ => violations.push(Violation::EdgeLabelKind { edge: i }),
            }
        }
        for v in 0..self.nodes.len() {
            let inc = self.incident(v);
            match inc.len() {
                1 => {
                    if self.edges[inc[0]].label == self.nodes[v] {
                        violations.push(Violation::CollapsibleLeaf { node: v });
                    }
                }
                2 if self.edges[inc[0]].label == self.nodes[v]
                    && self.edges[inc[1]].label == self.nodes[v] =>
                {
                    violations.push(Violation::EqualValenceTwo { node: v });
                }
                _ => {}
            }
        }

        Verdict {
            valid_splitting: splitting_ok,
            valid_chunk_tree: violations.is_empty(),
            violations,
        }
    }

    /// The support of a generator (nodes and edges whose label contains it)
    /// must form a connected subforest; empty support is fine.
    fn support_connected(&self, s: Vertex) -> bool {
        let members: Vec<usize> = (0..self.nodes.len())
            .filter(|&v| self.nodes[v].contains(s))
            .collect();
        if members.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        seen[members[0]] = true;
        let mut stack = vec![members[0]];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if e.label.contains(s) && e.touches(v) {
                    let w = e.other(v);
                    if self.nodes[w].contains(s) && !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
        }
        reached == members.len()
    }

    /// Chunk-kind node labels, sorted. For a valid chunk tree this equals
    /// the chunk decomposition of the base: the quotient-level fingerprint
    /// of the elliptic subgroups, shared by every tree over the same base.
    pub fn elliptic_chunks(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .nodes
            .iter()
            .copied()
            .filter(|&n| self.is_chunk_label(n))
            .collect();
        out.sort_by(|a, b| a.cmp_lex(*b));
        out.dedup();
        out
    }

    /// Canonical code of the labeled tree: invariant under node renaming,
    /// equal for two trees over the same base exactly when a label-preserving
    /// tree isomorphism exists. (Center-rooted subtree encoding.)
    pub fn canonical_code(&self) -> CanonicalCode {
        if !self.is_tree_shape() {
            // exact, non-canonical serialization; only trees get real codes
            let mut out = vec![0xFFu8];
            for n in &self.nodes {
                push_set(&mut out, *n);
            }
            for e in &self.edges {
                out.push(e.a as u8);
                out.push(e.b as u8);
                push_set(&mut out, e.label);
            }
            return CanonicalCode::from_bytes(out);
        }
        let centers = self.centers();
        let bytes = match centers.as_slice() {
            [c] => self.rooted_code(*c, None),
            [c1, c2] => {
                let e = (0..self.edges.len())
                    .find(|&e| self.edges[e].touches(*c1) && self.edges[e].touches(*c2))
                    .expect("adjacent centers");
                let r1 = self.rooted_code(*c1, Some(e));
                let r2 = self.rooted_code(*c2, Some(e));
                let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
                let mut out = vec![2u8];
                push_set(&mut out, self.edges[e].label);
                out.extend(lo);
                out.extend(hi);
                out
            }
            _ => unreachable!("a tree has one or two centers"),
        };
        CanonicalCode::from_bytes(bytes)
    }

    fn centers(&self) -> Vec<usize> {
        let n = self.nodes.len();
        if n == 1 {
            return vec![0];
        }
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                removed[v] = true;
                remaining -= 1;
                for e in &self.edges {
                    if e.touches(v) {
                        let w = e.other(v);
                        if !removed[w] {
                            degree[w] -= 1;
                            if degree[w] == 1 {
                                next.push(w);
                            }
                        }
                    }
                }
            }
            layer = next;
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }

    fn rooted_code(&self, v: usize, parent_edge: Option<usize>) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = Vec::new();
        for e in self.incident(v) {
            if Some(e) == parent_edge {
                continue;
            }
            let mut blob = Vec::new();
            push_set(&mut blob, self.edges[e].label);
            blob.extend(self.rooted_code(self.edges[e].other(v), Some(e)));
            kids.push(blob);
        }
        kids.sort();
        let mut out = vec![1u8];
        push_set(&mut out, self.nodes[v]);
        out.push(kids.len() as u8);
        for k in kids {
            out.extend(k);
        }
        out
    }

    /// Sorted multiset of edge labels; preserved by slide moves.
    pub fn edge_label_multiset(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.edges.iter().map(|e| e.label).collect();
        out.sort_by(|a, b| a.cmp_lex(*b));
        out
    }

    /// Names of a label's members, for display and JSON.
    pub fn label_names(&self, s: VertexSet) -> Vec<String> {
        self.base.set_names(s)
    }

    pub fn describe_violation(&self, v: &Violation) -> String {
        let set = |s: VertexSet| self.base.set_names(s).join(",");
        match v {
            Violation::NotATree => "the edge set does not form a tree".into(),
            Violation::EdgeLabelNotContained { edge } => format!(
                "edge {edge} label {{{}}} not contained in both endpoints",
                set(self.edges[*edge].label)
            ),
            Violation::SupportDisconnected { generator } => format!(
                "support of generator `{}` is disconnected",
                self.base.name(*generator)
            ),
            Violation::BaseEdgeUncovered { u, v } => format!(
                "base edge {}-{} not covered by any node label",
                self.base.name(*u),
                self.base.name(*v)
            ),
            Violation::MissingChunkNode { chunk } => {
                format!("no node carries the chunk {{{}}}", set(*chunk))
            }
            Violation::DuplicateChunkNode { chunk } => {
                format!("more than one node carries the chunk {{{}}}", set(*chunk))
            }
            Violation::NodeLabelKind { node } => format!(
                "node {node} label {{{}}} is neither a chunk, a generator nor an edge",
                set(self.nodes[*node])
            ),
            Violation::EdgeLabelKind { edge } => format!(
                "edge {edge} label {{{}}} is neither a generator nor an edge",
                set(self.edges[*edge].label)
            ),
            Violation::CollapsibleLeaf { node } => {
                format!("leaf node {node} has the same label as its edge")
            }
            Violation::EqualValenceTwo { node } => {
                format!("valence-two node {node} has the same label as both edges")
            }
        }
    }
}

fn push_set(out: &mut Vec<u8>, s: VertexSet) {
    out.push(s.len() as u8);
    for v in s.iter() {
        out.push(v.index() as u8);
    }
}

fn check_splittable(g: &DefiningGraph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v, m)) = g.edges().find(|&(_, _, m)| m < 3) {
        return Err(Error::NotLargeType {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
            label: m,
        });
    }
    Ok(())
}

/// How two chunks may be joined while assembling the canonical tree.
fn joint(g: &DefiningGraph, a: VertexSet, b: VertexSet) -> Option<VertexSet> {
    let inter = a.intersection(b);
    // shared edge wins; otherwise a shared vertex
    let mut edge_joints: Vec<VertexSet> = Vec::new();
    for u in inter.iter() {
        for v in g.neighbors(u).intersection(inter).iter() {
            if u < v {
                edge_joints.push(VertexSet::pair(u, v));
            }
        }
    }
    edge_joints.sort_by(|x, y| x.cmp_lex(*y));
    if let Some(&e) = edge_joints.first() {
        return Some(e);
    }
    inter.min_vertex().map(VertexSet::singleton)
}

fn joint_is_edge(s: VertexSet) -> bool {
    s.len() == 2
}

/// The canonical splitting of a connected large-type graph: one node per
/// chunk, joined component-by-component, preferring chunk pairs that share
/// an edge over pairs that share a vertex and resolving ties by the
/// lexicographic order on the (sorted) chunk list.
pub fn canonical_chunk_tree(g: &DefiningGraph) -> Result<SplittingTree> {
    check_splittable(g)?;
    let ch = chunks(g)?;
    let mut comp: Vec<usize> = (0..ch.len()).collect();
    let mut edges: Vec<(usize, usize, VertexSet)> = Vec::new();
    while comp.iter().any(|&c| c != comp[0]) {
        let pick = eligible_pairs(g, &ch, &comp)
            .into_iter()
            .next()
            .expect("connected graph always leaves an eligible pair");
        let (i, j, label) = pick;
        let (ci, cj) = (comp[i], comp[j]);
        for c in comp.iter_mut() {
            if *c == cj {
                *c = ci;
            }
        }
        edges.push((i, j, label));
    }
    SplittingTree::new(g.clone(), ch, edges)
}

/// Cross-component chunk pairs in preference order: edge-sharing pairs
/// first (if any exist they are mandatory), then vertex-sharing pairs;
/// each class sorted by (i, j).
fn eligible_pairs(
    g: &DefiningGraph,
    ch: &[VertexSet],
    comp: &[usize],
) -> Vec<(usize, usize, VertexSet)> {
    let mut edge_pairs = Vec::new();
    let mut vertex_pairs = Vec::new();
    for i in 0..ch.len() {
        for j in i + 1..ch.len() {
            if comp[i] == comp[j] {
                continue;
            }
            if let Some(label) = joint(g, ch[i], ch[j]) {
                if joint_is_edge(label) {
                    edge_pairs.push((i, j, label));
                } else {
                    vertex_pairs.push((i, j, label));
                }
            }
        }
    }
    if !edge_pairs.is_empty() {
        edge_pairs
    } else {
        vertex_pairs
    }
}

/// Every outcome of the canonical construction over all valid choice
/// sequences, deduplicated by canonical code and sorted by it.
pub fn enumerate_canonical_trees(g: &DefiningGraph) -> Result<Vec<SplittingTree>> {
    check_splittable(g)?;
    let ch = chunks(g)?;
    let mut out: BTreeMap<Vec<u8>, SplittingTree> = BTreeMap::new();
    let mut seen_states: std::collections::BTreeSet<Vec<u8>> = Default::default();
    let comp: Vec<usize> = (0..ch.len()).collect();
    enumerate_rec(g, &ch, comp, Vec::new(), &mut seen_states, &mut out)?;
    Ok(out.into_values().collect())
}

fn enumerate_rec(
    g: &DefiningGraph,
    ch: &[VertexSet],
    comp: Vec<usize>,
    edges: Vec<(usize, usize, VertexSet)>,
    seen: &mut std::collections::BTreeSet<Vec<u8>>,
    out: &mut BTreeMap<Vec<u8>, SplittingTree>,
) -> Result<()> {
    if comp.iter().all(|&c| c == comp[0]) {
        let t = SplittingTree::new(g.clone(), ch.to_vec(), edges)?;
        out.entry(t.canonical_code().as_bytes().to_vec())
            .or_insert(t);
        return Ok(());
    }
    // partial forests that only differ by the order the edges were added
    // behave identically from here on
    let mut key: Vec<(usize, usize, VertexSet)> = edges.clone();
    key.sort();
    let mut key_bytes = Vec::new();
    for (a, b, s) in &key {
        key_bytes.push(*a as u8);
        key_bytes.push(*b as u8);
        push_set(&mut key_bytes, *s);
    }
    if !seen.insert(key_bytes) {
        return Ok(());
    }
    for (i, j, label) in eligible_pairs(g, ch, &comp) {
        let mut comp2 = comp.clone();
        let (ci, cj) = (comp2[i], comp2[j]);
        for c in comp2.iter_mut() {
            if *c == cj {
                *c = ci;
            }
        }
        let mut edges2 = edges.clone();
        edges2.push((i, j, label));
        enumerate_rec(g, ch, comp2, edges2, seen, out)?;
    }
    Ok(())
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

    fn p3() -> DefiningGraph {
        parse("edge a b 3\nedge b c 3")
    }

    fn star3() -> DefiningGraph {
        parse("edge c x 3\nedge c y 3\nedge c z 3")
    }

    #[test]
    fn canonical_tree_of_path() {
        let g = p3();
        let t = canonical_chunk_tree(&g).unwrap();
        assert_eq!(t.node_count(), 2);
        assert_eq!(t.edge_count(), 1);
        assert_eq!(t.edges()[0].label, set(&g, &["b"]));
        let v = t.validate();
        assert!(
            v.valid_splitting && v.valid_chunk_tree,
            "{:?}",
            v.violations
        );
        assert_eq!(
            t.elliptic_chunks(),
            vec![set(&g, &["a", "b"]), set(&g, &["b", "c"])]
        );
    }

    #[test]
    fn construction_rejects_dangling_and_empty_labels() {
        let g = p3();
        let ab = set(&g, &["a", "b"]);
        // label referencing a vertex outside the base
        let wide = parse("edge a b 3\nedge b c 3\nedge c d 3");
        let abcd = set(&wide, &["a", "b", "c", "d"]);
        assert!(matches!(
            SplittingTree::new(g.clone(), vec![abcd], vec![]),
            Err(Error::InvalidTree(_))
        ));
        assert!(matches!(
            SplittingTree::new(g.clone(), vec![VertexSet::EMPTY], vec![]),
            Err(Error::InvalidTree(_))
        ));
        assert!(matches!(
            SplittingTree::new(g.clone(), vec![ab, ab], vec![(0, 2, ab)]),
            Err(Error::InvalidTree(_))
        ));
    }

    #[test]
    fn duplicate_chunk_label_is_flagged() {
        let g = p3();
        let ab = set(&g, &["a", "b"]);
        let b = set(&g, &["b"]);
        let t = SplittingTree::new(g.clone(), vec![ab, ab], vec![(0, 1, b)]).unwrap();
        let v = t.validate();
        assert!(!v.valid_chunk_tree);
        assert!(v
            .violations
            .iter()
            .any(|x| matches!(x, Violation::DuplicateChunkNode { .. })));
        assert!(v
            .violations
            .iter()
            .any(|x| matches!(x, Violation::MissingChunkNode { .. })));
    }

    #[test]
    fn valence_two_middle_is_flagged() {
        let g = p3();
        let ab = set(&g, &["a", "b"]);
        let bc = set(&g, &["b", "c"]);
        let b = set(&g, &["b"]);
        let t = SplittingTree::new(g.clone(), vec![ab, b, bc], vec![(0, 1, b), (1, 2, b)]).unwrap();
        let v = t.validate();
        assert!(v.valid_splitting);
        assert!(!v.valid_chunk_tree);
        assert!(v
            .violations
            .iter()
            .any(|x| matches!(x, Violation::EqualValenceTwo { node: 1 })));
    }

    #[test]
    fn tree_code_invariant_under_renaming() {
        let g = star3();
        let c = set(&g, &["c"]);
        let cx = set(&g, &["c", "x"]);
        let cy = set(&g, &["c", "y"]);
        let cz = set(&g, &["c", "z"]);
        let t1 =
            SplittingTree::new(g.clone(), vec![cx, cy, cz], vec![(0, 1, c), (1, 2, c)]).unwrap();
        let t2 =
            SplittingTree::new(g.clone(), vec![cz, cy, cx], vec![(2, 1, c), (1, 0, c)]).unwrap();
        assert_eq!(t1.canonical_code(), t2.canonical_code());
    }

    #[test]
    fn star_reduced_paths_have_distinct_codes() {
        let g = star3();
        let c = set(&g, &["c"]);
        let cx = set(&g, &["c", "x"]);
        let cy = set(&g, &["c", "y"]);
        let cz = set(&g, &["c", "z"]);
        let mid = |m: VertexSet, l: VertexSet, r: VertexSet| {
            SplittingTree::new(g.clone(), vec![l, m, r], vec![(0, 1, c), (1, 2, c)]).unwrap()
        };
        let t_x = mid(cx, cy, cz);
        let t_y = mid(cy, cx, cz);
        let t_z = mid(cz, cx, cy);
        let codes = [
            t_x.canonical_code(),
            t_y.canonical_code(),
            t_z.canonical_code(),
        ];
        assert_ne!(codes[0], codes[1]);
        assert_ne!(codes[0], codes[2]);
        assert_ne!(codes[1], codes[2]);
    }

    #[test]
    fn enumerate_star_gives_three_paths() {
        let g = star3();
        let trees = enumerate_canonical_trees(&g).unwrap();
        assert_eq!(trees.len(), 3);
        for t in &trees {
            assert_eq!(t.node_count(), 3);
            let v = t.validate();
            assert!(v.valid_chunk_tree);
        }
    }

    #[test]
    fn fig1_canonical_tree_shape() {
        let g = parse(
            "edge p q 7\nedge p r 7\nedge q r 7\nedge p s 7\nedge q s 7\nedge q y 7\nedge q g 7",
        );
        let t = canonical_chunk_tree(&g).unwrap();
        assert_eq!(t.node_count(), 4);
        let mut labels = t.edge_label_multiset();
        labels.sort_by(|a, b| a.cmp_lex(*b));
        assert_eq!(
            labels,
            vec![set(&g, &["p", "q"]), set(&g, &["q"]), set(&g, &["q"])]
        );
        assert!(t.validate().valid_chunk_tree);

        let all = enumerate_canonical_trees(&g).unwrap();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn splitting_rejects_non_large_type() {
        let g = parse("edge a b 2\nedge b c 3");
        assert!(matches!(
            canonical_chunk_tree(&g),
            Err(Error::NotLargeType { .. })
        ));
    }

    #[test]
    fn single_chunk_graph() {
        let g = parse("edge a b 3\nedge b c 3\nedge a c 3");
        let t = canonical_chunk_tree(&g).unwrap();
        assert_eq!(t.node_count(), 1);
        assert_eq!(t.edge_count(), 0);
        assert!(t.validate().valid_chunk_tree);
        assert_eq!(t.elliptic_chunks(), vec![g.full_set()]);
    }
}
