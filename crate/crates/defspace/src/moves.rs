//! Elementary deformations of splitting trees: collapse, expansion and
//! slide, plus reduced/surviving status, exhaustive enumeration of chunk
//! trees over a base graph, and the spine report.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::canon::CanonicalCode;
use crate::chunks::chunks;
use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, VertexSet};
use crate::splitting::{SplittingTree, TreeEdge};

/// Descriptor of a single elementary move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Remove `edge` and merge its endpoints. Requires the edge label to
    /// equal one endpoint's label; the merged node keeps the other label.
    Collapse { edge: usize },
    /// Split a new node labeled `label` off `node`, transferring the listed
    /// incident edges to it. Inverse of a collapse.
    Expand {
        node: usize,
        label: VertexSet,
        transfer: Vec<usize>,
    },
    /// Re-attach `moving` across `along` at their shared endpoint `via`.
    Slide {
        moving: usize,
        along: usize,
        via: usize,
    },
}

/// Reduced/surviving status of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStatus {
    /// No collapse is possible.
    pub reduced: bool,
    /// Per edge: some collapse sequence reaches a reduced tree without
    /// collapsing it.
    pub surviving_edges: Vec<bool>,
    /// All edges surviving.
    pub surviving: bool,
}

fn collapse_direction(t: &SplittingTree, e: usize) -> Option<(usize, usize)> {
    let edge = t.edges()[e];
    if edge.label == t.node_label(edge.a) {
        Some((edge.a, edge.b))
    } else if edge.label == t.node_label(edge.b) {
        Some((edge.b, edge.a))
    } else {
        None
    }
}

pub fn is_collapsible(t: &SplittingTree, e: usize) -> bool {
    collapse_direction(t, e).is_some()
}

/// Collapse `e`, merging the endpoint whose label equals the edge label
/// into the other one. Node indices above the removed node shift down by
/// one; edge order is otherwise preserved.
pub fn collapse(t: &SplittingTree, e: usize) -> Result<SplittingTree> {
    collapse_with_receipt(t, e).map(|(t2, _)| t2)
}

/// Collapse, also returning the expansion that inverts it.
pub fn collapse_with_receipt(t: &SplittingTree, e: usize) -> Result<(SplittingTree, Move)> {
    if e >= t.edge_count() {
        return Err(Error::InvalidMove(format!("no edge {e}")));
    }
    let (src, dst) = collapse_direction(t, e).ok_or(Error::NotCollapsible(e))?;
    let old_label = t.node_label(src);
    let remap = |v: usize| {
        let v = if v == src { dst } else { v };
        if v > src {
            v - 1
        } else {
            v
        }
    };
    let nodes: Vec<VertexSet> = (0..t.node_count())
        .filter(|&v| v != src)
        .map(|v| t.node_label(v))
        .collect();
    let mut edges = Vec::with_capacity(t.edge_count() - 1);
    let mut transferred = Vec::new();
    for (i, old) in t.edges().iter().enumerate() {
        if i == e {
            continue;
        }
        if old.touches(src) {
            transferred.push(edges.len());
        }
        let (a, b) = (remap(old.a), remap(old.b));
        edges.push(TreeEdge {
            a: a.min(b),
            b: a.max(b),
            label: old.label,
        });
    }
    let receipt = Move::Expand {
        node: remap(dst),
        label: old_label,
        transfer: transferred,
    };
    Ok((t.replace_parts(nodes, edges), receipt))
}

/// Elementary expansion at `node`: a new node labeled `label` is attached
/// by an edge also labeled `label`, and the listed incident edges move to
/// it. The result may fail the chunk-tree axioms (for instance a leaf equal
/// to its edge label); that is for `validate` to report, not an error here.
pub fn expand(
    t: &SplittingTree,
    node: usize,
    label: VertexSet,
    transfer: &[usize],
) -> Result<SplittingTree> {
    if node >= t.node_count() {
        return Err(Error::InvalidMove(format!("no node {node}")));
    }
    let shape_ok = label.len() == 1
        || (label.len() == 2 && {
            let mut it = label.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            t.base().has_edge(u, v)
        });
    if !shape_ok {
        return Err(Error::InvalidMove(
            "expansion label must be a generator or an edge of the base".into(),
        ));
    }
    if !label.is_subset(t.node_label(node)) {
        return Err(Error::InvalidMove(
            "expansion label must be contained in the node label".into(),
        ));
    }
    let mut seen = BTreeSet::new();
    for &e in transfer {
        if e >= t.edge_count() || !t.edges()[e].touches(node) {
            return Err(Error::InvalidMove(format!(
                "edge {e} is not incident to node {node}"
            )));
        }
        if !t.edges()[e].label.is_subset(label) {
            return Err(Error::InvalidMove(format!(
                "transferred edge {e} label not contained in the expansion label"
            )));
        }
        if !seen.insert(e) {
            return Err(Error::InvalidMove(format!("edge {e} transferred twice")));
        }
    }
    let mut nodes: Vec<VertexSet> = t.node_labels().to_vec();
    let fresh = nodes.len();
    nodes.push(label);
    let mut edges = t.edges().to_vec();
    for &e in transfer {
        let old = edges[e];
        let other = old.other(node);
        edges[e] = TreeEdge {
            a: other.min(fresh),
            b: other.max(fresh),
            label: old.label,
        };
    }
    edges.push(TreeEdge {
        a: node,
        b: fresh,
        label,
    });
    Ok(t.replace_parts(nodes, edges))
}

/// Slide edge `moving` across edge `along`: their shared endpoint is
/// replaced by the far endpoint of `along`. Requires the moving label to be
/// contained in the carrying label.
pub fn slide(t: &SplittingTree, moving: usize, along: usize) -> Result<SplittingTree> {
    if moving >= t.edge_count() || along >= t.edge_count() {
        return Err(Error::InvalidMove("no such edge".into()));
    }
    if moving == along {
        return Err(Error::InvalidMove(
            "cannot slide an edge along itself".into(),
        ));
    }
    let f = t.edges()[moving];
    let e = t.edges()[along];
    let via = [f.a, f.b]
        .into_iter()
        .find(|&v| e.touches(v))
        .ok_or_else(|| Error::InvalidMove("edges share no endpoint".into()))?;
    if !f.label.is_subset(e.label) {
        return Err(Error::InvalidMove(
            "moving edge label not contained in the carrying edge label".into(),
        ));
    }
    let kept = f.other(via);
    let target = e.other(via);
    debug_assert_ne!(kept, target, "slide would duplicate an edge");
    let mut edges = t.edges().to_vec();
    edges[moving] = TreeEdge {
        a: kept.min(target),
        b: kept.max(target),
        label: f.label,
    };
    Ok(t.replace_parts(t.node_labels().to_vec(), edges))
}

/// Execute any move descriptor. For a slide the recorded shared endpoint
/// is checked against the actual edges.
pub fn apply(t: &SplittingTree, mv: &Move) -> Result<SplittingTree> {
    match mv {
        Move::Collapse { edge } => collapse(t, *edge),
        Move::Expand {
            node,
            label,
            transfer,
        } => expand(t, *node, *label, transfer),
        Move::Slide { moving, along, via } => {
            if *moving < t.edge_count()
                && *along < t.edge_count()
                && !(t.edges()[*moving].touches(*via) && t.edges()[*along].touches(*via))
            {
                return Err(Error::InvalidMove(format!(
                    "node {via} is not the shared endpoint"
                )));
            }
            slide(t, *moving, *along)
        }
    }
}

/// All collapsible edge indices.
pub fn collapsible_edges(t: &SplittingTree) -> Vec<usize> {
    (0..t.edge_count())
        .filter(|&e| is_collapsible(t, e))
        .collect()
}

/// Legal slides as (moving, along) pairs.
pub fn legal_slides(t: &SplittingTree) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for f in 0..t.edge_count() {
        for e in 0..t.edge_count() {
            if f == e {
                continue;
            }
            let (fe, ee) = (t.edges()[f], t.edges()[e]);
            let shares = [fe.a, fe.b].into_iter().any(|v| ee.touches(v));
            if shares && fe.label.is_subset(ee.label) {
                out.push((f, e));
            }
        }
    }
    out
}

/// Reduced status and surviving edges, by exhaustive search over all
/// collapse sequences down to reduced trees.
pub fn tree_status(t: &SplittingTree) -> TreeStatus {
    let m = t.edge_count();
    let mut surviving = vec![false; m];
    let origins: Vec<usize> = (0..m).collect();
    search_survivors(t, &origins, &mut surviving);
    let reduced = collapsible_edges(t).is_empty();
    let surviving_all = surviving.iter().all(|&s| s);
    TreeStatus {
        reduced,
        surviving_edges: surviving,
        surviving: surviving_all,
    }
}

fn search_survivors(t: &SplittingTree, origins: &[usize], surviving: &mut [bool]) {
    let collapsible = collapsible_edges(t);
    if collapsible.is_empty() {
        for &o in origins {
            surviving[o] = true;
        }
        return;
    }
    for e in collapsible {
        let (t2, _) = collapse_with_receipt(t, e).expect("collapsible edge");
        let mut origins2 = origins.to_vec();
        origins2.remove(e);
        search_survivors(&t2, &origins2, surviving);
    }
}

/// Bounds for the exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    /// Extra (non-chunk) nodes allowed beyond the chunk count. `None` uses
    /// the worst-case bound `C(k,2) * (2(k-2) + 2n)` for `k` chunks and `n`
    /// base vertices; the search always saturates far below it.
    pub max_extra: Option<usize>,
    /// Hard guard on the number of isomorphism classes.
    pub class_cap: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_extra: None,
            class_cap: 200_000,
        }
    }
}

pub fn default_max_extra(chunk_count: usize, vertex_count: usize) -> usize {
    let pairs = chunk_count * chunk_count.saturating_sub(1) / 2;
    pairs * (2 * chunk_count.saturating_sub(2) + 2 * vertex_count)
}

/// All isomorphism classes of valid chunk trees over `g`, sorted by
/// canonical code.
///
/// Trees on exactly the chunk nodes are enumerated directly (topologies via
/// Pruefer sequences, edge labels from the chunk intersections); every tree
/// with extra nodes arises from one of those by elementary expansions that
/// stay valid, so a breadth-first closure under expansion is complete.
pub fn enumerate_chunk_trees(
    g: &DefiningGraph,
    limits: &EnumerationLimits,
) -> Result<Vec<SplittingTree>> {
    let base_trees = chunk_node_trees(g)?;
    let ch = chunks(g)?;
    let cap_nodes = ch.len()
        + limits
            .max_extra
            .unwrap_or_else(|| default_max_extra(ch.len(), g.vertex_count()));

    let mut found: BTreeMap<Vec<u8>, SplittingTree> = BTreeMap::new();
    let mut queue: VecDeque<SplittingTree> = VecDeque::new();
    for t in base_trees {
        let key = t.canonical_code().as_bytes().to_vec();
        if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
            e.insert(t.clone());
            queue.push_back(t);
        }
    }
    while let Some(t) = queue.pop_front() {
        if t.node_count() >= cap_nodes {
            continue;
        }
        for t2 in valid_expansions(&t) {
            let key = t2.canonical_code().as_bytes().to_vec();
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(key) {
                e.insert(t2.clone());
                if found.len() > limits.class_cap {
                    return Err(Error::EnumerationOverflow {
                        cap: limits.class_cap,
                        found: found.len(),
                    });
                }
                queue.push_back(t2);
            }
        }
    }
    Ok(found.into_values().collect())
}

/// All valid chunk trees whose nodes are exactly the chunks.
fn chunk_node_trees(g: &DefiningGraph) -> Result<Vec<SplittingTree>> {
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
    let ch = chunks(g)?;
    let k = ch.len();
    let mut out = Vec::new();
    if k == 1 {
        let t = SplittingTree::new(g.clone(), ch, Vec::new())?;
        if t.validate().valid_chunk_tree {
            out.push(t);
        }
        return Ok(out);
    }
    let mut prufer = vec![0usize; k - 2];
    loop {
        let topo = prufer_edges(&prufer, k);
        extend_with_labels(g, &ch, &topo, 0, &mut Vec::new(), &mut out)?;
        // next Pruefer sequence
        let mut i = 0;
        loop {
            if i == prufer.len() {
                return Ok(out);
            }
            prufer[i] += 1;
            if prufer[i] < k {
                break;
            }
            prufer[i] = 0;
            i += 1;
        }
        if prufer.is_empty() {
            return Ok(out);
        }
    }
}

fn extend_with_labels(
    g: &DefiningGraph,
    ch: &[VertexSet],
    topo: &[(usize, usize)],
    idx: usize,
    labels: &mut Vec<VertexSet>,
    out: &mut Vec<SplittingTree>,
) -> Result<()> {
    if idx == topo.len() {
        let edges: Vec<(usize, usize, VertexSet)> = topo
            .iter()
            .zip(labels.iter())
            .map(|(&(a, b), &l)| (a, b, l))
            .collect();
        let t = SplittingTree::new(g.clone(), ch.to_vec(), edges)?;
        if t.validate().valid_chunk_tree {
            out.push(t);
        }
        return Ok(());
    }
    let (a, b) = topo[idx];
    let inter = ch[a].intersection(ch[b]);
    for cand in sublabels(g, inter) {
        labels.push(cand);
        extend_with_labels(g, ch, topo, idx + 1, labels, out)?;
        labels.pop();
    }
    Ok(())
}

/// Cyclic and dihedral labels available inside a vertex set: its singletons
/// and the base edges it contains, in lexicographic order.
fn sublabels(g: &DefiningGraph, s: VertexSet) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = s.iter().map(VertexSet::singleton).collect();
    for u in s.iter() {
        for v in g.neighbors(u).intersection(s).iter() {
            if u < v {
                out.push(VertexSet::pair(u, v));
            }
        }
    }
    out.sort_by(|a, b| a.cmp_lex(*b));
    out
}

/// Every expansion of `t` that yields a valid chunk tree.
fn valid_expansions(t: &SplittingTree) -> Vec<SplittingTree> {
    let mut out = Vec::new();
    for node in 0..t.node_count() {
        for label in sublabels(t.base(), t.node_label(node)) {
            let transferable: Vec<usize> = t
                .incident(node)
                .into_iter()
                .filter(|&e| t.edges()[e].label.is_subset(label))
                .collect();
            let d = transferable.len();
            for mask in 0u32..(1 << d) {
                let transfer: Vec<usize> = (0..d)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| transferable[i])
                    .collect();
                let t2 = expand(t, node, label, &transfer).expect("preconditions hold");
                if t2.validate().valid_chunk_tree {
                    out.push(t2);
                }
            }
        }
    }
    out
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut it = leaves.into_iter();
    let (u, v) = (it.next().unwrap(), it.next().unwrap());
    edges.push((u.min(v), u.max(v)));
    edges
}

/// One isomorphism class in a spine report.
#[derive(Clone)]
pub struct SpineClass {
    pub code: CanonicalCode,
    pub tree: SplittingTree,
    pub status: TreeStatus,
}

/// The deformation spine of a base graph: all chunk-tree classes, the slide
/// graph on the reduced ones, and the collapse order on the surviving ones.
pub struct SpineReport {
    pub base_code: CanonicalCode,
    /// Sorted by canonical code.
    pub classes: Vec<SpineClass>,
    /// Undirected slide adjacency between reduced classes (class indices).
    pub slide_edges: Vec<(usize, usize)>,
    /// Single collapses between surviving classes, from the larger tree to
    /// the smaller.
    pub collapse_edges: Vec<(usize, usize)>,
    /// Length of the longest chain of single collapses through surviving
    /// classes.
    pub dimension: usize,
    /// The slide graph restricted to reduced classes is connected (always
    /// true when any reduced class exists; recorded for the report).
    pub slide_connected: bool,
}

impl SpineReport {
    pub fn reduced_indices(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].status.reduced)
            .collect()
    }

    pub fn surviving_indices(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].status.surviving)
            .collect()
    }

    pub fn class_index(&self, code: &CanonicalCode) -> Option<usize> {
        self.classes
            .binary_search_by(|c| c.code.as_bytes().cmp(code.as_bytes()))
            .ok()
    }
}

pub fn spine(g: &DefiningGraph, limits: &EnumerationLimits) -> Result<SpineReport> {
    let trees = enumerate_chunk_trees(g, limits)?;
    let classes: Vec<SpineClass> = trees
        .into_iter()
        .map(|tree| SpineClass {
            code: tree.canonical_code(),
            status: tree_status(&tree),
            tree,
        })
        .collect();
    let index: BTreeMap<Vec<u8>, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.code.as_bytes().to_vec(), i))
        .collect();
    let lookup = |code: &CanonicalCode| -> usize {
        *index
            .get(code.as_bytes())
            .expect("moves stay inside the enumerated classes")
    };

    let mut slide_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, class) in classes.iter().enumerate() {
        if !class.status.reduced {
            continue;
        }
        for (f, e) in legal_slides(&class.tree) {
            let t2 = slide(&class.tree, f, e).expect("legal slide");
            let j = lookup(&t2.canonical_code());
            if i != j {
                slide_edges.insert((i.min(j), i.max(j)));
            }
        }
    }

    let mut collapse_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, class) in classes.iter().enumerate() {
        if !class.status.surviving {
            continue;
        }
        for e in collapsible_edges(&class.tree) {
            let t2 = collapse(&class.tree, e).expect("collapsible");
            let j = lookup(&t2.canonical_code());
            if classes[j].status.surviving {
                collapse_edges.insert((i, j));
            }
        }
    }

    let dimension = longest_chain(classes.len(), &collapse_edges);

    let reduced: Vec<usize> = (0..classes.len())
        .filter(|&i| classes[i].status.reduced)
        .collect();
    let slide_connected = slide_component_count(&reduced, &slide_edges) <= 1;

    Ok(SpineReport {
        base_code: g.canonical_code(),
        classes,
        slide_edges: slide_edges.into_iter().collect(),
        collapse_edges: collapse_edges.into_iter().collect(),
        dimension,
        slide_connected,
    })
}

fn longest_chain(n: usize, edges: &BTreeSet<(usize, usize)>) -> usize {
    // collapse strictly shrinks trees, so the relation is acyclic
    let mut memo = vec![None; n];
    fn go(v: usize, edges: &BTreeSet<(usize, usize)>, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[v] {
            return d;
        }
        let best = edges
            .iter()
            .filter(|&&(a, _)| a == v)
            .map(|&(_, b)| 1 + go(b, edges, memo))
            .max()
            .unwrap_or(0);
        memo[v] = Some(best);
        best
    }
    (0..n).map(|v| go(v, edges, &mut memo)).max().unwrap_or(0)
}

fn slide_component_count(reduced: &[usize], edges: &BTreeSet<(usize, usize)>) -> usize {
    if reduced.is_empty() {
        return 0;
    }
    let mut comp: BTreeMap<usize, usize> = reduced.iter().map(|&v| (v, v)).collect();
    fn find(comp: &mut BTreeMap<usize, usize>, v: usize) -> usize {
        let p = comp[&v];
        if p == v {
            v
        } else {
            let r = find(comp, p);
            comp.insert(v, r);
            r
        }
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
        if ra != rb {
            comp.insert(ra, rb);
        }
    }
    let roots: BTreeSet<usize> = reduced.iter().map(|&v| find(&mut comp, v)).collect();
    roots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::canonical_chunk_tree;

    fn parse(s: &str) -> DefiningGraph {
        DefiningGraph::parse(s).unwrap()
    }

    fn set(g: &DefiningGraph, names: &[&str]) -> VertexSet {
        names.iter().map(|n| g.vertex(n).unwrap()).collect()
    }

    fn star3() -> DefiningGraph {
        parse("edge c x 3\nedge c y 3\nedge c z 3")
    }

    /// Star-shaped tree over STAR3: a cyclic hub {c} joined to the three
    /// dihedral chunk nodes.
    fn star_tree(g: &DefiningGraph) -> SplittingTree {
        let c = set(g, &["c"]);
        SplittingTree::new(
            g.clone(),
            vec![
                c,
                set(g, &["c", "x"]),
                set(g, &["c", "y"]),
                set(g, &["c", "z"]),
            ],
            vec![(0, 1, c), (0, 2, c), (0, 3, c)],
        )
        .unwrap()
    }

    #[test]
    fn collapse_star_hub_edge() {
        let g = star3();
        let t = star_tree(&g);
        assert!(t.validate().valid_chunk_tree);
        let t2 = collapse(&t, 0).unwrap();
        assert_eq!(t2.node_count(), 3);
        let v = t2.validate();
        assert!(v.valid_splitting && v.valid_chunk_tree);
        // middle node is now {c,x}
        let code_mid_x = {
            let c = set(&g, &["c"]);
            SplittingTree::new(
                g.clone(),
                vec![
                    set(&g, &["c", "x"]),
                    set(&g, &["c", "y"]),
                    set(&g, &["c", "z"]),
                ],
                vec![(0, 1, c), (0, 2, c)],
            )
            .unwrap()
            .canonical_code()
        };
        assert_eq!(t2.canonical_code(), code_mid_x);
    }

    #[test]
    fn canonical_tree_is_not_collapsible() {
        let g = parse("edge a b 3\nedge b c 3");
        let t = canonical_chunk_tree(&g).unwrap();
        assert!(matches!(collapse(&t, 0), Err(Error::NotCollapsible(0))));
    }

    #[test]
    fn collapse_expand_round_trip() {
        let g = star3();
        let t = star_tree(&g);
        let before = t.canonical_code();
        for e in collapsible_edges(&t) {
            let (t2, receipt) = collapse_with_receipt(&t, e).unwrap();
            let back = match receipt {
                Move::Expand {
                    node,
                    label,
                    ref transfer,
                } => expand(&t2, node, label, transfer).unwrap(),
                _ => unreachable!(),
            };
            assert_eq!(back.canonical_code(), before);
        }
    }

    #[test]
    fn expand_to_duplicate_chunk_label_flagged() {
        let g = star3();
        let c = set(&g, &["c"]);
        let t = SplittingTree::new(
            g.clone(),
            vec![
                set(&g, &["c", "y"]),
                set(&g, &["c", "x"]),
                set(&g, &["c", "z"]),
            ],
            vec![(0, 1, c), (1, 2, c)],
        )
        .unwrap();
        let t2 = expand(&t, 1, set(&g, &["c", "x"]), &[0]).unwrap();
        let v = t2.validate();
        assert!(v.valid_splitting);
        assert!(!v.valid_chunk_tree);
    }

    #[test]
    fn expand_no_transfer_gives_collapsible_leaf() {
        let g = star3();
        let t = star_tree(&g);
        let t2 = expand(&t, 1, set(&g, &["c"]), &[]).unwrap();
        let v = t2.validate();
        assert!(v.valid_splitting && !v.valid_chunk_tree);
    }

    #[test]
    fn slide_middle_of_star_path() {
        let g = star3();
        let c = set(&g, &["c"]);
        // path {c,y} - {c,x} - {c,z}
        let t = SplittingTree::new(
            g.clone(),
            vec![
                set(&g, &["c", "y"]),
                set(&g, &["c", "x"]),
                set(&g, &["c", "z"]),
            ],
            vec![(0, 1, c), (1, 2, c)],
        )
        .unwrap();
        let t2 = slide(&t, 0, 1).unwrap();
        // edge {c,y}-{c,x} slides along {c,x}-{c,z}: middle becomes {c,z}
        let expected = SplittingTree::new(
            g.clone(),
            vec![
                set(&g, &["c", "y"]),
                set(&g, &["c", "z"]),
                set(&g, &["c", "x"]),
            ],
            vec![(0, 1, c), (1, 2, c)],
        )
        .unwrap();
        assert_eq!(t2.canonical_code(), expected.canonical_code());
        assert_eq!(t2.node_count(), t.node_count());
        assert_eq!(t2.edge_label_multiset(), t.edge_label_multiset());

        // the same move through the descriptor interface
        let by_descriptor = apply(
            &t,
            &Move::Slide {
                moving: 0,
                along: 1,
                via: 1,
            },
        )
        .unwrap();
        assert_eq!(by_descriptor.canonical_code(), t2.canonical_code());
        // wrong shared endpoint is rejected
        assert!(apply(
            &t,
            &Move::Slide {
                moving: 0,
                along: 1,
                via: 2,
            },
        )
        .is_err());
    }

    #[test]
    fn apply_runs_collapse_and_expand_descriptors() {
        let g = star3();
        let t = star_tree(&g);
        let direct = collapse(&t, 0).unwrap();
        let via_descriptor = apply(&t, &Move::Collapse { edge: 0 }).unwrap();
        assert_eq!(direct.canonical_code(), via_descriptor.canonical_code());
        let (_, receipt) = collapse_with_receipt(&t, 0).unwrap();
        let back = apply(&direct, &receipt).unwrap();
        assert_eq!(back.canonical_code(), t.canonical_code());
    }

    #[test]
    fn slide_rejects_containment_failure() {
        let g = parse(
            "edge p q 7\nedge p r 7\nedge q r 7\nedge p s 7\nedge q s 7\nedge q y 7\nedge q g 7",
        );
        let t = canonical_chunk_tree(&g).unwrap();
        // find the {p,q}-labeled edge and a {q}-labeled edge sharing a node
        let pq = set(&g, &["p", "q"]);
        let f = (0..t.edge_count())
            .find(|&e| t.edges()[e].label == pq)
            .unwrap();
        let e = (0..t.edge_count())
            .find(|&e| {
                e != f
                    && t.edges()[e].label.len() == 1
                    && [t.edges()[f].a, t.edges()[f].b]
                        .iter()
                        .any(|&v| t.edges()[e].touches(v))
            })
            .unwrap();
        // sliding the dihedral edge along the cyclic one must fail
        assert!(slide(&t, f, e).is_err());
        // the other direction is legal
        assert!(slide(&t, e, f).is_ok());
    }

    #[test]
    fn star_tree_status() {
        let g = star3();
        let t = star_tree(&g);
        let st = tree_status(&t);
        assert!(!st.reduced);
        assert!(st.surviving);
        assert!(st.surviving_edges.iter().all(|&b| b));
    }

    #[test]
    fn enumerate_path_and_triangle() {
        let g = parse("edge a b 3\nedge b c 3");
        let classes = enumerate_chunk_trees(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(classes.len(), 1);

        let g = parse("edge a b 3\nedge b c 3\nedge a c 3");
        let classes = enumerate_chunk_trees(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].node_count(), 1);
    }

    #[test]
    fn enumerate_star_classes() {
        let g = star3();
        let classes = enumerate_chunk_trees(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(classes.len(), 4);
        let reduced = classes.iter().filter(|t| tree_status(t).reduced).count();
        assert_eq!(reduced, 3);
    }

    #[test]
    fn spine_of_star() {
        let g = star3();
        let report = spine(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(report.classes.len(), 4);
        assert_eq!(report.reduced_indices().len(), 3);
        assert_eq!(report.surviving_indices().len(), 4);
        assert_eq!(report.dimension, 1);
        assert!(report.slide_connected);
    }

    #[test]
    fn spine_of_path_is_a_point() {
        let g = parse("edge a b 3\nedge b c 3");
        let report = spine(&g, &EnumerationLimits::default()).unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.dimension, 0);
        assert!(report.slide_edges.is_empty());
        assert!(report.slide_connected);
    }
}
