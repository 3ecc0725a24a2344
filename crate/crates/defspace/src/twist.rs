//! Twist isomorphisms between defining graphs, the outer automorphism type
//! of a dihedral Artin group, and the RAAG presentation of the twist group
//! stabilizing a reduced chunk tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::canon::CanonicalCode;
use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, Vertex, VertexSet};
use crate::moves::{collapsible_edges, tree_status};
use crate::splitting::{LabelKind, SplittingTree};

/// Re-attachment of a branch hanging off a separating vertex.
///
/// `branch` is one connected component of the graph minus `source`; every
/// edge from the branch to the rest of the graph ends at `source`, and the
/// move re-attaches each such edge to `target` instead, keeping its label.
/// `target` is reached from `source` by a path of odd-labeled edges that
/// avoids the branch; this odd path is what realizes the move as a group
/// isomorphism (a composition of edge and Dehn twists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMove {
    pub source: Vertex,
    pub branch: VertexSet,
    pub target: Vertex,
    pub odd_path: Vec<Vertex>,
}

/// All twist moves available on a connected graph, in deterministic order
/// (source index, branch, target index).
pub fn twist_moves(g: &DefiningGraph) -> Vec<TwistMove> {
    let full = g.full_set();
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut rest = full;
        rest.remove(s);
        let components = g.components_within(rest);
        if components.len() < 2 {
            continue; // not separating
        }
        for &branch in &components {
            let outside = full.difference(branch);
            let reachable = g.odd_reachable_within(s, outside);
            for t in reachable.iter() {
                if t == s {
                    continue;
                }
                let odd_path = odd_path_within(g, s, t, outside);
                out.push(TwistMove {
                    source: s,
                    branch,
                    target: t,
                    odd_path,
                });
            }
        }
    }
    out
}

/// Shortest odd-labeled path from `s` to `t` inside `within`, by BFS with
/// neighbors visited in index order.
fn odd_path_within(g: &DefiningGraph, s: Vertex, t: Vertex, within: VertexSet) -> Vec<Vertex> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut seen = VertexSet::singleton(s);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for u in g.neighbors(v).intersection(within).iter() {
            if !seen.contains(u) && g.label(v, u).is_some_and(|m| m % 2 == 1) {
                seen.insert(u);
                parent.insert(u, v);
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = parent[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Apply a twist move: every edge from the branch to the source vertex is
/// re-attached to the target vertex with the same label. The vertex set and
/// the label multiset are untouched.
pub fn apply_twist(g: &DefiningGraph, mv: &TwistMove) -> DefiningGraph {
    let mut labels = g.labels_map().clone();
    for x in g.neighbors(mv.source).intersection(mv.branch).iter() {
        let key = (x.min(mv.source), x.max(mv.source));
        let m = labels.remove(&key).expect("branch edge");
        let new_key = (x.min(mv.target), x.max(mv.target));
        let previous = labels.insert(new_key, m);
        debug_assert!(previous.is_none(), "twist created a duplicate edge");
    }
    g.with_labels(labels)
}

/// One graph in a twist orbit.
pub struct OrbitMember {
    pub code: CanonicalCode,
    pub graph: DefiningGraph,
}

/// A discovered edge of the orbit graph, with the move that produced it.
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub source: String,
    pub target: String,
    pub odd_path: Vec<String>,
}

pub struct TwistOrbit {
    /// First-discovery order; the input graph is member 0.
    pub members: Vec<OrbitMember>,
    pub edges: Vec<OrbitEdge>,
    /// The search stopped at `node_cap` distinct codes.
    pub truncated: bool,
}

/// Closure of `g` under twist moves, deduplicated by canonical code, by
/// breadth-first search. Stops after `node_cap` distinct graphs and sets
/// the truncation flag.
pub fn twist_orbit(g: &DefiningGraph, node_cap: usize) -> Result<TwistOrbit> {
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
    let mut members = vec![OrbitMember {
        code: g.canonical_code(),
        graph: g.clone(),
    }];
    let mut index: BTreeMap<Vec<u8>, usize> =
        BTreeMap::from([(members[0].code.as_bytes().to_vec(), 0)]);
    let mut edges: Vec<OrbitEdge> = Vec::new();
    let mut edge_seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    'bfs: while let Some(i) = queue.pop_front() {
        let current = members[i].graph.clone();
        for mv in twist_moves(&current) {
            let image = apply_twist(&current, &mv);
            let code = image.canonical_code();
            let j = match index.get(code.as_bytes()) {
                Some(&j) => j,
                None => {
                    if members.len() >= node_cap {
                        truncated = true;
                        break 'bfs;
                    }
                    let j = members.len();
                    index.insert(code.as_bytes().to_vec(), j);
                    members.push(OrbitMember { code, graph: image });
                    queue.push_back(j);
                    j
                }
            };
            if i != j && edge_seen.insert((i, j)) {
                edges.push(OrbitEdge {
                    from: i,
                    to: j,
                    source: current.name(mv.source).to_string(),
                    target: current.name(mv.target).to_string(),
                    odd_path: mv
                        .odd_path
                        .iter()
                        .map(|&v| current.name(v).to_string())
                        .collect(),
                });
            }
        }
    }
    Ok(TwistOrbit {
        members,
        edges,
        truncated,
    })
}

/// The outer automorphism group of the dihedral Artin group on one edge
/// with coefficient `m >= 3`: cyclic of order two when `m` is odd, and
/// `C2 x D_inf` when `m` is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutDihedral {
    Odd,
    Even {
        half: u32,
        generators: [GeneratorAction; 3],
    },
}

/// A generating outer automorphism in the even case, written in the
/// presentation `<x, t | x^n = t x^n t^-1>` with `n = m/2`, `x = ab`,
/// `t = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorAction {
    pub name: &'static str,
    pub action: &'static str,
}

pub fn out_dihedral(m: u32) -> Result<OutDihedral> {
    if m < 3 {
        return Err(Error::CoefficientTooSmall(m));
    }
    if m % 2 == 1 {
        Ok(OutDihedral::Odd)
    } else {
        Ok(OutDihedral::Even {
            half: m / 2,
            generators: [
                GeneratorAction {
                    name: "alpha",
                    action: "x -> x^-1, t -> t",
                },
                GeneratorAction {
                    name: "beta",
                    action: "x -> x, t -> t^-1",
                },
                GeneratorAction {
                    name: "gamma",
                    action: "x -> x, t -> tx",
                },
            ],
        })
    }
}

impl OutDihedral {
    pub fn group_description(&self) -> &'static str {
        match self {
            OutDihedral::Odd => "C2",
            OutDihedral::Even { .. } => "C2 x D_inf",
        }
    }
}

/// The central Garside power of a spherical dihedral parabolic: `Delta` for
/// an even coefficient, `Delta^2` for an odd one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GarsideCentral {
    pub pair: (Vertex, Vertex),
    pub label: u32,
    pub power: u8,
}

impl GarsideCentral {
    pub fn new(g: &DefiningGraph, u: Vertex, v: Vertex) -> Self {
        let label = g.label(u, v).expect("dihedral pair must be an edge");
        GarsideCentral {
            pair: (u.min(v), u.max(v)),
            label,
            power: if label.is_multiple_of(2) { 1 } else { 2 },
        }
    }
}

/// The concrete element a stabilizer generator stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabElement {
    /// A standard generator (the center of a cyclic edge group).
    Generator(Vertex),
    /// The central Garside power of a dihedral parabolic.
    Central(GarsideCentral),
    /// A free direct factor of a cyclic centralizer inside a chunk with at
    /// least two edges; its rank is not computed here.
    FreeFactor {
        origin: VertexSet,
        edge_generator: Vertex,
    },
}

/// Which factor of an oriented-edge centralizer a generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// The center of the edge group itself.
    EdgeCyclic,
    /// The center of the (dihedral) origin vertex group.
    VertexCentral,
    /// An uncomputed free factor; makes the presentation inexact.
    SymbolicFree,
}

impl FactorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorKind::EdgeCyclic => "edge-cyclic",
            FactorKind::VertexCentral => "vertex-central",
            FactorKind::SymbolicFree => "symbolic-free",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabGenerator {
    pub name: String,
    /// Tree edge index and its orientation: origin node, far node.
    pub edge: usize,
    pub origin: usize,
    pub far: usize,
    pub factor: FactorKind,
    pub element: StabElement,
}

/// A diagonal relation applied in the quotient.
#[derive(Clone, Debug)]
pub enum Identification {
    /// The edge-group center, identified across the two orientations.
    EdgeDiagonal { edge: usize, generators: Vec<usize> },
    /// The center of a dihedral vertex group, identified across all
    /// oriented edges originating there.
    VertexCentralDiagonal { node: usize, generators: Vec<usize> },
}

impl Identification {
    pub fn generators(&self) -> &[usize] {
        match self {
            Identification::EdgeDiagonal { generators, .. } => generators,
            Identification::VertexCentralDiagonal { generators, .. } => generators,
        }
    }
}

/// Presentation of the twist group stabilizing a reduced chunk tree: a
/// direct product of edge-centralizer factors modulo diagonal centers.
/// When every factor is concrete the result is a right-angled Artin group
/// on a complete commutation graph, i.e. free abelian.
#[derive(Clone, Debug)]
pub struct RaagPresentation {
    pub generators: Vec<StabGenerator>,
    /// Pairs of generator indices that commute. Distinct direct factors
    /// commute and each concrete factor is abelian, so this is every pair;
    /// a symbolic free factor is opaque and only commutes externally.
    pub commutation: Vec<(usize, usize)>,
    pub identifications: Vec<Identification>,
    /// Chunk labels with at least two edges whose center was taken to be
    /// trivial, so no diagonal was applied for them.
    pub suppressed_centers: Vec<VertexSet>,
    pub exact: bool,
    /// `concrete generators - identifications` when exact.
    pub free_abelian_rank: Option<usize>,
}

/// Twist-group presentation for a valid *reduced* chunk tree over `g`.
///
/// Per oriented tree edge with label `L` and origin label `O`:
/// a dihedral `L` contributes its central Garside power; a cyclic `L = {s}`
/// with dihedral origin contributes the commuting pair `s`, `Z(O)`; a
/// cyclic `L` with a bigger-chunk origin contributes `s` plus a symbolic
/// free factor and makes the result inexact. The quotient then identifies
/// each edge center across its two orientations and each dihedral vertex
/// center across its originating edges.
pub fn stabilizer_presentation(g: &DefiningGraph, k: &SplittingTree) -> Result<RaagPresentation> {
    let verdict = k.validate();
    if !verdict.valid_chunk_tree {
        let why = verdict
            .violations
            .first()
            .map(|v| k.describe_violation(v))
            .unwrap_or_else(|| "invalid".into());
        return Err(Error::InvalidTree(why));
    }
    if !tree_status(k).reduced {
        return Err(Error::NotReduced);
    }
    debug_assert!(collapsible_edges(k).is_empty());

    let mut generators: Vec<StabGenerator> = Vec::new();
    let mut exact = true;

    for (ei, edge) in k.edges().iter().enumerate() {
        for (origin, far) in [(edge.a, edge.b), (edge.b, edge.a)] {
            let l = edge.label;
            let o = k.node_label(origin);
            let tag = format!("e{ei}{}", if origin == edge.a { "+" } else { "-" });
            match k.label_kind(l) {
                Some(LabelKind::Cyclic) => {
                    let s = l.min_vertex().unwrap();
                    generators.push(StabGenerator {
                        name: format!("{}@{tag}", g.name(s)),
                        edge: ei,
                        origin,
                        far,
                        factor: FactorKind::EdgeCyclic,
                        element: StabElement::Generator(s),
                    });
                    if o.len() == 2 {
                        let mut it = o.iter();
                        let (u, v) = (it.next().unwrap(), it.next().unwrap());
                        let z = GarsideCentral::new(g, u, v);
                        generators.push(StabGenerator {
                            name: format!("Delta[{}{}]^{}@{tag}", g.name(u), g.name(v), z.power),
                            edge: ei,
                            origin,
                            far,
                            factor: FactorKind::VertexCentral,
                            element: StabElement::Central(z),
                        });
                    } else {
                        exact = false;
                        generators.push(StabGenerator {
                            name: format!("F[{}|{}]@{tag}", g.set_names(o).join(""), g.name(s)),
                            edge: ei,
                            origin,
                            far,
                            factor: FactorKind::SymbolicFree,
                            element: StabElement::FreeFactor {
                                origin: o,
                                edge_generator: s,
                            },
                        });
                    }
                }
                _ => {
                    // dihedral edge label; reducedness rules out L = O
                    let mut it = l.iter();
                    let (u, v) = (it.next().unwrap(), it.next().unwrap());
                    let z = GarsideCentral::new(g, u, v);
                    generators.push(StabGenerator {
                        name: format!("Delta[{}{}]^{}@{tag}", g.name(u), g.name(v), z.power),
                        edge: ei,
                        origin,
                        far,
                        factor: FactorKind::EdgeCyclic,
                        element: StabElement::Central(z),
                    });
                }
            }
        }
    }

    let mut identifications: Vec<Identification> = Vec::new();
    for ei in 0..k.edge_count() {
        let gens: Vec<usize> = generators
            .iter()
            .enumerate()
            .filter(|(_, gen)| gen.edge == ei && gen.factor == FactorKind::EdgeCyclic)
            .map(|(i, _)| i)
            .collect();
        debug_assert_eq!(gens.len(), 2);
        identifications.push(Identification::EdgeDiagonal {
            edge: ei,
            generators: gens,
        });
    }
    let mut suppressed: Vec<VertexSet> = Vec::new();
    for node in 0..k.node_count() {
        let o = k.node_label(node);
        if o.len() != 2 {
            if k.degree(node) > 0 && o.len() > 2 {
                suppressed.push(o);
            }
            continue;
        }
        let gens: Vec<usize> = generators
            .iter()
            .enumerate()
            .filter(|(_, gen)| gen.origin == node && gen.factor == FactorKind::VertexCentral)
            .map(|(i, _)| i)
            .collect();
        if !gens.is_empty() {
            identifications.push(Identification::VertexCentralDiagonal {
                node,
                generators: gens,
            });
        }
    }
    suppressed.sort_by(|a, b| a.cmp_lex(*b));
    suppressed.dedup();

    let commutation: Vec<(usize, usize)> = (0..generators.len())
        .flat_map(|i| (i + 1..generators.len()).map(move |j| (i, j)))
        .collect();

    let free_abelian_rank = if exact {
        let concrete = generators.len();
        Some(concrete - identifications.len())
    } else {
        None
    };

    Ok(RaagPresentation {
        generators,
        commutation,
        identifications,
        suppressed_centers: suppressed,
        exact,
        free_abelian_rank,
    })
}
