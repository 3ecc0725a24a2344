//! Aggregated reports and the JSON shapes emitted by the command line
//! front end. Everything here serializes deterministically: field order is
//! fixed by the struct definitions and all collections are sorted.

use serde::Serialize;

use crate::chunks::chunks;
use crate::error::Result;
use crate::graph::{ClassFlags, DefiningGraph, VertexSet};
use crate::moves::{spine, EnumerationLimits, SpineReport};
use crate::splitting::{canonical_chunk_tree, LabelKind, SplittingTree};
use crate::twist::{
    stabilizer_presentation, twist_orbit, FactorKind, Identification, RaagPresentation,
    StabElement, TwistOrbit,
};

#[derive(Serialize)]
pub struct ValidateJson {
    pub valid: bool,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub vertices: usize,
    pub edges: usize,
    pub flags: ClassFlags,
}

#[derive(Serialize)]
pub struct ChunksJson {
    pub chunks: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct TreeNodeJson {
    pub id: usize,
    pub label: Vec<String>,
    pub kind: String,
}

#[derive(Serialize)]
pub struct TreeEdgeJson {
    pub a: usize,
    pub b: usize,
    pub label: Vec<String>,
}

#[derive(Serialize)]
pub struct TreeJson {
    pub nodes: Vec<TreeNodeJson>,
    pub edges: Vec<TreeEdgeJson>,
}

#[derive(Serialize)]
pub struct ClassJson {
    pub code: String,
    pub nodes: usize,
    pub reduced: bool,
    pub surviving: bool,
    pub tree: TreeJson,
}

#[derive(Serialize)]
pub struct CountsJson {
    pub classes: usize,
    pub reduced: usize,
    pub surviving: usize,
}

#[derive(Serialize)]
pub struct SlideGraphJson {
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub connected: bool,
}

#[derive(Serialize)]
pub struct SpineJson {
    pub base_code: String,
    pub counts: CountsJson,
    pub dimension: usize,
    pub classes: Vec<ClassJson>,
    pub slide_graph: SlideGraphJson,
    pub collapse_poset: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct EnumerateJson {
    pub count: usize,
    pub classes: Vec<ClassJson>,
}

#[derive(Serialize)]
pub struct OrbitMemberJson {
    pub code: String,
    pub adg: String,
}

#[derive(Serialize)]
pub struct OrbitMoveJson {
    pub from: String,
    pub to: String,
    pub source: String,
    pub target: String,
    pub odd_path: Vec<String>,
}

#[derive(Serialize)]
pub struct TwistOrbitJson {
    pub count: usize,
    pub truncated: bool,
    pub members: Vec<OrbitMemberJson>,
    pub moves: Vec<OrbitMoveJson>,
}

#[derive(Serialize)]
pub struct GeneratorJson {
    pub name: String,
    pub edge: usize,
    pub oriented_edge: [usize; 2],
    pub factor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub garside_pair: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub garside_power: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin_chunk: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct IdentificationJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    pub generators: Vec<usize>,
}

#[derive(Serialize)]
pub struct PresentationJson {
    pub exact: bool,
    pub free_abelian_rank: Option<usize>,
    pub generators: Vec<GeneratorJson>,
    pub commutation: Vec<[usize; 2]>,
    pub identifications: Vec<IdentificationJson>,
    pub suppressed_centers: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct StabilizerEntryJson {
    pub tree_code: String,
    pub presentation: PresentationJson,
}

#[derive(Serialize)]
pub struct StabilizersJson {
    pub stabilizers: Vec<StabilizerEntryJson>,
}

#[derive(Serialize)]
pub struct CensusMemberJson {
    pub code: String,
    pub chunk_tree_classes: usize,
}

#[derive(Serialize)]
pub struct CensusJson {
    pub members: Vec<CensusMemberJson>,
    pub total: usize,
}

#[derive(Serialize)]
pub struct SpineSummaryJson {
    pub counts: CountsJson,
    pub dimension: usize,
    pub slide_connected: bool,
}

#[derive(Serialize)]
pub struct OrbitSummaryJson {
    pub count: usize,
    pub truncated: bool,
    pub members: Vec<OrbitMemberJson>,
}

#[derive(Serialize)]
pub struct InputJson {
    pub code: String,
    pub vertices: usize,
    pub edges: usize,
    pub flags: ClassFlags,
}

/// The full report: classification, chunks, canonical splitting, spine and
/// twist-orbit summaries, stabilizer presentations for every reduced class,
/// and the orbit census (chunk-tree class counts summed over the orbit).
#[derive(Serialize)]
pub struct ReportJson {
    pub input: InputJson,
    pub chunks: Vec<Vec<String>>,
    pub canonical_tree: ClassJson,
    pub spine: SpineSummaryJson,
    pub twist_orbit: OrbitSummaryJson,
    pub stabilizers: Vec<StabilizerEntryJson>,
    pub orbit_census: CensusJson,
}

/// Options shared by the report-producing entry points.
#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub max_extra: Option<usize>,
    pub class_cap: usize,
    pub node_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            max_extra: None,
            class_cap: 200_000,
            node_cap: 10_000,
        }
    }
}

impl ReportOptions {
    pub fn limits(&self) -> EnumerationLimits {
        EnumerationLimits {
            max_extra: self.max_extra,
            class_cap: self.class_cap,
        }
    }
}

fn names(g: &DefiningGraph, s: VertexSet) -> Vec<String> {
    g.set_names(s)
}

pub fn chunks_json(g: &DefiningGraph) -> Result<ChunksJson> {
    Ok(ChunksJson {
        chunks: chunks(g)?.into_iter().map(|c| names(g, c)).collect(),
    })
}

pub fn tree_json(t: &SplittingTree) -> TreeJson {
    let kind_str = |s: VertexSet| match t.label_kind(s) {
        Some(LabelKind::Chunk) => "chunk",
        Some(LabelKind::Cyclic) => "cyclic",
        Some(LabelKind::Dihedral) => "dihedral",
        None => "invalid",
    };
    TreeJson {
        nodes: (0..t.node_count())
            .map(|i| TreeNodeJson {
                id: i,
                label: names(t.base(), t.node_label(i)),
                kind: kind_str(t.node_label(i)).to_string(),
            })
            .collect(),
        edges: t
            .edges()
            .iter()
            .map(|e| TreeEdgeJson {
                a: e.a,
                b: e.b,
                label: names(t.base(), e.label),
            })
            .collect(),
    }
}

fn class_json(t: &SplittingTree) -> ClassJson {
    let status = crate::moves::tree_status(t);
    ClassJson {
        code: t.canonical_code().to_hex(),
        nodes: t.node_count(),
        reduced: status.reduced,
        surviving: status.surviving,
        tree: tree_json(t),
    }
}

pub fn enumerate_json(g: &DefiningGraph, limits: &EnumerationLimits) -> Result<EnumerateJson> {
    let classes = crate::moves::enumerate_chunk_trees(g, limits)?;
    Ok(EnumerateJson {
        count: classes.len(),
        classes: classes.iter().map(class_json).collect(),
    })
}

pub fn spine_json(report: &SpineReport) -> SpineJson {
    let code = |i: usize| report.classes[i].code.to_hex();
    let reduced = report.reduced_indices();
    let surviving = report.surviving_indices();
    SpineJson {
        base_code: report.base_code.to_hex(),
        counts: CountsJson {
            classes: report.classes.len(),
            reduced: reduced.len(),
            surviving: surviving.len(),
        },
        dimension: report.dimension,
        classes: report
            .classes
            .iter()
            .map(|c| ClassJson {
                code: c.code.to_hex(),
                nodes: c.tree.node_count(),
                reduced: c.status.reduced,
                surviving: c.status.surviving,
                tree: tree_json(&c.tree),
            })
            .collect(),
        slide_graph: SlideGraphJson {
            nodes: reduced.iter().map(|&i| code(i)).collect(),
            edges: report
                .slide_edges
                .iter()
                .map(|&(a, b)| [code(a), code(b)])
                .collect(),
            connected: report.slide_connected,
        },
        collapse_poset: report
            .collapse_edges
            .iter()
            .map(|&(a, b)| [code(a), code(b)])
            .collect(),
    }
}

pub fn twist_orbit_json(orbit: &TwistOrbit) -> TwistOrbitJson {
    TwistOrbitJson {
        count: orbit.members.len(),
        truncated: orbit.truncated,
        members: orbit
            .members
            .iter()
            .map(|m| OrbitMemberJson {
                code: m.code.to_hex(),
                adg: m.graph.to_adg(),
            })
            .collect(),
        moves: orbit
            .edges
            .iter()
            .map(|e| OrbitMoveJson {
                from: orbit.members[e.from].code.to_hex(),
                to: orbit.members[e.to].code.to_hex(),
                source: e.source.clone(),
                target: e.target.clone(),
                odd_path: e.odd_path.clone(),
            })
            .collect(),
    }
}

pub fn presentation_json(g: &DefiningGraph, p: &RaagPresentation) -> PresentationJson {
    PresentationJson {
        exact: p.exact,
        free_abelian_rank: p.free_abelian_rank,
        generators: p
            .generators
            .iter()
            .map(|gen| {
                let mut out = GeneratorJson {
                    name: gen.name.clone(),
                    edge: gen.edge,
                    oriented_edge: [gen.origin, gen.far],
                    factor: gen.factor.as_str().to_string(),
                    generator: None,
                    garside_pair: None,
                    garside_power: None,
                    origin_chunk: None,
                };
                match &gen.element {
                    StabElement::Generator(v) => {
                        out.generator = Some(g.name(*v).to_string());
                    }
                    StabElement::Central(z) => {
                        out.garside_pair =
                            Some([g.name(z.pair.0).to_string(), g.name(z.pair.1).to_string()]);
                        out.garside_power = Some(z.power);
                    }
                    StabElement::FreeFactor {
                        origin,
                        edge_generator,
                    } => {
                        out.origin_chunk = Some(names(g, *origin));
                        out.generator = Some(g.name(*edge_generator).to_string());
                    }
                }
                debug_assert!(gen.factor != FactorKind::SymbolicFree || !p.exact);
                out
            })
            .collect(),
        commutation: p.commutation.iter().map(|&(a, b)| [a, b]).collect(),
        identifications: p
            .identifications
            .iter()
            .map(|id| match id {
                Identification::EdgeDiagonal { edge, generators } => IdentificationJson {
                    kind: "edge-diagonal".into(),
                    edge: Some(*edge),
                    node: None,
                    generators: generators.clone(),
                },
                Identification::VertexCentralDiagonal { node, generators } => IdentificationJson {
                    kind: "vertex-central-diagonal".into(),
                    edge: None,
                    node: Some(*node),
                    generators: generators.clone(),
                },
            })
            .collect(),
        suppressed_centers: p.suppressed_centers.iter().map(|&s| names(g, s)).collect(),
    }
}

/// Stabilizer presentations for every reduced class of the spine, keyed by
/// tree code.
pub fn stabilizers_json(g: &DefiningGraph, report: &SpineReport) -> Result<StabilizersJson> {
    let mut out = Vec::new();
    for i in report.reduced_indices() {
        let class = &report.classes[i];
        let p = stabilizer_presentation(g, &class.tree)?;
        out.push(StabilizerEntryJson {
            tree_code: class.code.to_hex(),
            presentation: presentation_json(g, &p),
        });
    }
    Ok(StabilizersJson { stabilizers: out })
}

/// The whole pipeline on one graph. Requires a connected large-type input;
/// the census enumerates chunk trees for every member of the twist orbit.
pub fn run_report(g: &DefiningGraph, opts: &ReportOptions) -> Result<ReportJson> {
    let flags = g.classify();
    let chunk_sets = chunks(g)?;
    let canonical = canonical_chunk_tree(g)?;
    let spine_report = spine(g, &opts.limits())?;
    let orbit = twist_orbit(g, opts.node_cap)?;
    let stabilizers = stabilizers_json(g, &spine_report)?;

    let mut census_members = Vec::new();
    let mut total = 0usize;
    for m in &orbit.members {
        let classes = crate::moves::enumerate_chunk_trees(&m.graph, &opts.limits())?;
        total += classes.len();
        census_members.push(CensusMemberJson {
            code: m.code.to_hex(),
            chunk_tree_classes: classes.len(),
        });
    }

    let reduced = report_counts(&spine_report);
    Ok(ReportJson {
        input: InputJson {
            code: g.canonical_code().to_hex(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            flags,
        },
        chunks: chunk_sets.into_iter().map(|c| names(g, c)).collect(),
        canonical_tree: class_json(&canonical),
        spine: SpineSummaryJson {
            counts: reduced,
            dimension: spine_report.dimension,
            slide_connected: spine_report.slide_connected,
        },
        twist_orbit: OrbitSummaryJson {
            count: orbit.members.len(),
            truncated: orbit.truncated,
            members: orbit
                .members
                .iter()
                .map(|m| OrbitMemberJson {
                    code: m.code.to_hex(),
                    adg: m.graph.to_adg(),
                })
                .collect(),
        },
        stabilizers: stabilizers.stabilizers,
        orbit_census: CensusJson {
            members: census_members,
            total,
        },
    })
}

fn report_counts(report: &SpineReport) -> CountsJson {
    CountsJson {
        classes: report.classes.len(),
        reduced: report.reduced_indices().len(),
        surviving: report.surviving_indices().len(),
    }
}
