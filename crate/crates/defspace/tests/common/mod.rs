//! Shared test helpers: a deterministic RNG, random graph generators, and
//! independent oracles (subset-enumeration chunks, exhaustive tree search,
//! exact integer matrix rank). The oracles deliberately avoid the library's
//! own code paths wherever the library result is what is being checked.

#![allow(dead_code)]

use std::collections::BTreeSet;

use defspace::graph::{DefiningGraph, Vertex, VertexSet};
use defspace::splitting::SplittingTree;

/// SplitMix64: tiny, seedable, stable across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn label(&mut self) -> u32 {
        3 + self.below(5) as u32 // 3..=7
    }
}

/// Random connected graph on 2..=max_v vertices with labels in {3..7}:
/// a random-parent spanning tree plus extra edges with probability ~30%.
pub fn random_connected_graph(rng: &mut Rng, max_v: usize) -> DefiningGraph {
    let n = 2 + rng.below(max_v - 1);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String, u32)> = Vec::new();
    let mut present: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..n {
        let p = rng.below(i);
        present.insert((p, i));
        edges.push((names[p].clone(), names[i].clone(), rng.label()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !present.contains(&(i, j)) && rng.below(10) < 3 {
                edges.push((names[i].clone(), names[j].clone(), rng.label()));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let edge_refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    DefiningGraph::from_parts(&refs, &edge_refs).unwrap()
}

/// Random labeled graph on 1..=max_v vertices, not necessarily connected.
pub fn random_graph(rng: &mut Rng, max_v: usize) -> DefiningGraph {
    let n = 1 + rng.below(max_v);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String, u32)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(10) < 4 {
                edges.push((names[i].clone(), names[j].clone(), rng.label()));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let edge_refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    DefiningGraph::from_parts(&refs, &edge_refs).unwrap()
}

/// The same graph with vertices renamed by a random permutation.
pub fn random_relabel(rng: &mut Rng, g: &DefiningGraph) -> DefiningGraph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        perm.swap(i, j);
    }
    let rename = |v: Vertex| format!("w{:02}", perm[v.index()]);
    let names: Vec<String> = g.vertices().map(rename).collect();
    let edges: Vec<(String, String, u32)> = g
        .edges()
        .map(|(u, v, m)| (rename(u), rename(v), m))
        .collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let edge_refs: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    DefiningGraph::from_parts(&refs, &edge_refs).unwrap()
}

// --- independent chunk oracle -------------------------------------------

fn uf_components(edges: &[(usize, usize)], verts: &[usize]) -> usize {
    if verts.is_empty() {
        return 0;
    }
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let pos = |v: usize| verts.iter().position(|&w| w == v);
    for &(a, b) in edges {
        if let (Some(i), Some(j)) = (pos(a), pos(b)) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    (0..verts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// Chunks by plain subset enumeration with union-find connectivity; no
/// memoization, no shared code with the implementation beyond the graph
/// accessors.
pub fn chunk_oracle(g: &DefiningGraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let all_edges: Vec<(usize, usize)> =
        g.edges().map(|(u, v, _)| (u.index(), v.index())).collect();
    let connected = |verts: &[usize]| -> bool {
        verts.len() <= 1 || {
            let edges: Vec<(usize, usize)> = all_edges
                .iter()
                .copied()
                .filter(|&(a, b)| verts.contains(&a) && verts.contains(&b))
                .collect();
            uf_components(&edges, verts) == 1
        }
    };
    let mut passing: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if !connected(&verts) {
            continue;
        }
        let mut ok = true;
        for &v in &verts {
            let rest: Vec<usize> = verts.iter().copied().filter(|&w| w != v).collect();
            if !connected(&rest) {
                ok = false;
                break;
            }
        }
        if ok {
            'outer: for &(a, b) in &all_edges {
                if verts.contains(&a) && verts.contains(&b) {
                    let rest: Vec<usize> = verts
                        .iter()
                        .copied()
                        .filter(|&w| w != a && w != b)
                        .collect();
                    if !connected(&rest) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            passing.push(verts);
        }
    }
    let mut maximal: Vec<VertexSet> = passing
        .iter()
        .filter(|s| {
            !passing
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
        })
        .map(|s| s.iter().map(|&i| Vertex::from_index(i)).collect())
        .collect();
    maximal.sort_by(|a, b| a.cmp_lex(*b));
    maximal
}

// --- exhaustive chunk-tree oracle ----------------------------------------

/// Every candidate label a tree simplex may carry: chunks (for nodes) plus
/// all singletons and base edges.
fn candidate_labels(g: &DefiningGraph) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let chunks = defspace::chunks::chunks(g).unwrap();
    let mut small: Vec<VertexSet> = g.vertices().map(VertexSet::singleton).collect();
    for (u, v, _) in g.edges() {
        small.push(VertexSet::pair(u, v));
    }
    (chunks, small)
}

fn prufer_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        // decode
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut edges = Vec::new();
        for &s in &seq {
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
        out.push(edges);
        // advance
        let mut i = 0;
        loop {
            if i == seq.len() {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Generate-and-test enumeration of all valid chunk trees with at most
/// `max_nodes` nodes: all topologies, all node labelings placing each chunk
/// exactly once plus arbitrary extra cyclic/dihedral labels, all edge
/// labelings compatible with containment. Returns the canonical code set.
pub fn exhaustive_tree_codes(g: &DefiningGraph, max_nodes: usize) -> BTreeSet<Vec<u8>> {
    let (chunks, small) = candidate_labels(g);
    let k = chunks.len();
    let mut codes = BTreeSet::new();
    for n in k.max(1)..=max_nodes {
        let extra = n - k;
        for topo in prufer_trees(n) {
            // choose which nodes carry the chunks (injective) and which
            // carry extra labels
            assign_nodes(
                g,
                &chunks,
                &small,
                &topo,
                n,
                extra,
                &mut vec![None; n],
                0,
                &mut codes,
            );
        }
    }
    codes
}

#[allow(clippy::too_many_arguments)]
fn assign_nodes(
    g: &DefiningGraph,
    chunks: &[VertexSet],
    small: &[VertexSet],
    topo: &[(usize, usize)],
    n: usize,
    extra: usize,
    labels: &mut Vec<Option<VertexSet>>,
    next: usize,
    codes: &mut BTreeSet<Vec<u8>>,
) {
    if next == n {
        let used_chunks = labels
            .iter()
            .filter(|l| chunks.contains(&l.unwrap()))
            .count();
        if used_chunks != chunks.len() {
            return;
        }
        fill_edges(g, topo, labels, 0, &mut Vec::new(), codes);
        return;
    }
    let placed_chunks = labels[..next]
        .iter()
        .filter(|l| chunks.contains(&l.unwrap()))
        .count();
    let remaining_slots = n - next;
    // chunks still to place must fit
    let needed = chunks.len() - placed_chunks;
    if needed > remaining_slots {
        return;
    }
    for &c in chunks {
        if labels[..next].iter().any(|l| l.unwrap() == c) {
            continue;
        }
        labels[next] = Some(c);
        assign_nodes(g, chunks, small, topo, n, extra, labels, next + 1, codes);
    }
    if extra > 0 && remaining_slots > needed {
        for &s in small {
            if chunks.contains(&s) {
                continue; // would duplicate a chunk label
            }
            labels[next] = Some(s);
            assign_nodes(g, chunks, small, topo, n, extra, labels, next + 1, codes);
        }
    }
    labels[next] = None;
}

fn fill_edges(
    g: &DefiningGraph,
    topo: &[(usize, usize)],
    labels: &[Option<VertexSet>],
    idx: usize,
    chosen: &mut Vec<VertexSet>,
    codes: &mut BTreeSet<Vec<u8>>,
) {
    if idx == topo.len() {
        let nodes: Vec<VertexSet> = labels.iter().map(|l| l.unwrap()).collect();
        let edges: Vec<(usize, usize, VertexSet)> = topo
            .iter()
            .zip(chosen.iter())
            .map(|(&(a, b), &l)| (a, b, l))
            .collect();
        if let Ok(t) = SplittingTree::new(g.clone(), nodes, edges) {
            if t.validate().valid_chunk_tree {
                codes.insert(t.canonical_code().as_bytes().to_vec());
            }
        }
        return;
    }
    let (a, b) = topo[idx];
    let inter = labels[a].unwrap().intersection(labels[b].unwrap());
    for u in inter.iter() {
        chosen.push(VertexSet::singleton(u));
        fill_edges(g, topo, labels, idx + 1, chosen, codes);
        chosen.pop();
        for v in g.neighbors(u).intersection(inter).iter() {
            if u < v {
                chosen.push(VertexSet::pair(u, v));
                fill_edges(g, topo, labels, idx + 1, chosen, codes);
                chosen.pop();
            }
        }
    }
}

// --- integer matrix rank ---------------------------------------------------

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot);
        let p = m[row][col];
        let pivot_row = m[row].clone();
        for other in m.iter_mut().skip(row + 1) {
            let q = other[col];
            if q == 0 {
                continue;
            }
            for (cell, &pv) in other.iter_mut().zip(&pivot_row) {
                *cell = *cell * p - pv * q;
            }
            // keep entries small
            let g = row_gcd(other);
            if g > 1 {
                for cell in other.iter_mut() {
                    *cell /= g;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

fn row_gcd(row: &[i128]) -> i128 {
    let mut g: i128 = 0;
    for &x in row {
        g = gcd(g, x.abs());
    }
    g.max(1)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// --- misc -------------------------------------------------------------------

pub fn fixture(name: &str) -> DefiningGraph {
    let path = format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name);
    DefiningGraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn set(g: &DefiningGraph, names: &[&str]) -> VertexSet {
    names.iter().map(|n| g.vertex(n).unwrap()).collect()
}
