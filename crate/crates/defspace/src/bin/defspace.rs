//! Command-line front end. One verb per computation; all heavy lifting
//! lives in the library. Diagnostics go to stderr; exit code 1 means the
//! input failed to parse or validate, 2 means it parsed but violates a
//! structural constraint (disconnected or not large-type).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use defspace::error::Result;
use defspace::graph::DefiningGraph;
use defspace::moves::spine;
use defspace::report::{self, ReportOptions};
use defspace::splitting::{canonical_chunk_tree, enumerate_canonical_trees};
use defspace::twist::twist_orbit;
use defspace::{chunks, dot};

#[derive(Parser)]
#[command(
    name = "defspace",
    version,
    about = "Chunk decompositions, visual splittings and deformation spines of large-type defining graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    /// Lexicographic tie-breaks on sorted vertex-name lists.
    Lex,
}

#[derive(Args)]
struct Common {
    /// Input .adg file.
    path: PathBuf,
    /// Emit JSON on stdout instead of text.
    #[arg(long)]
    json: bool,
    /// Also write a DOT rendering to this path.
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Deterministic tie-break policy (only `lex` exists).
    #[arg(long, value_enum, default_value = "lex")]
    policy: Policy,
    /// Worker-thread hint; results do not depend on it.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an .adg file and check its invariants.
    Validate(Common),
    /// Classification flags of the graph.
    Classify(Common),
    /// The chunk decomposition.
    Chunks(Common),
    /// The canonical splitting tree (all construction outcomes with --all).
    Split {
        #[command(flatten)]
        common: Common,
        /// Enumerate every outcome of the joining order.
        #[arg(long)]
        all: bool,
    },
    /// All isomorphism classes of chunk trees.
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Extra nodes allowed beyond the chunk count.
        #[arg(long, value_name = "N")]
        max_extra: Option<usize>,
    },
    /// The deformation spine: classes, slide graph, collapse order.
    Spine {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N")]
        max_extra: Option<usize>,
    },
    /// Twist-equivalent defining graphs.
    TwistOrbit {
        #[command(flatten)]
        common: Common,
        /// Stop after this many distinct graphs.
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        node_cap: usize,
    },
    /// Twist-group presentations for every reduced class.
    Stabilizer {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N")]
        max_extra: Option<usize>,
    },
    /// Everything: flags, chunks, splitting, spine, orbit, stabilizers.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "N")]
        max_extra: Option<usize>,
        #[arg(long, value_name = "N", default_value_t = 10_000)]
        node_cap: usize,
    },
}

fn load(path: &Path) -> Result<DefiningGraph> {
    let text = std::fs::read_to_string(path)?;
    DefiningGraph::parse(&text)
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn write_dot(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content)?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Validate(c) => {
            let g = load(&c.path)?;
            if c.json {
                emit_json(&report::ValidateJson {
                    valid: true,
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                });
            } else {
                println!(
                    "valid: {} vertices, {} edges",
                    g.vertex_count(),
                    g.edge_count()
                );
            }
        }
        Cmd::Classify(c) => {
            let g = load(&c.path)?;
            let flags = g.classify();
            if c.json {
                emit_json(&report::ClassifyJson {
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    flags,
                });
            } else {
                println!("{flags:#?}");
            }
        }
        Cmd::Chunks(c) => {
            let g = load(&c.path)?;
            let json = report::chunks_json(&g)?;
            if let Some(dot_path) = &c.dot {
                write_dot(dot_path, &dot::chunk_dot(&g, &chunks::chunks(&g)?))?;
            }
            if c.json {
                emit_json(&json);
            } else {
                for ch in &json.chunks {
                    println!("{{{}}}", ch.join(","));
                }
            }
        }
        Cmd::Split { common: c, all } => {
            let g = load(&c.path)?;
            if all {
                let trees = enumerate_canonical_trees(&g)?;
                let views: Vec<_> = trees.iter().map(report::tree_json).collect();
                if let (Some(dot_path), Some(first)) = (&c.dot, trees.first()) {
                    write_dot(dot_path, &dot::tree_dot(first))?;
                }
                if c.json {
                    emit_json(&views);
                } else {
                    println!("{} construction outcomes", trees.len());
                    for t in &trees {
                        println!("  {}", t.canonical_code().to_hex());
                    }
                }
            } else {
                let t = canonical_chunk_tree(&g)?;
                if let Some(dot_path) = &c.dot {
                    write_dot(dot_path, &dot::tree_dot(&t))?;
                }
                if c.json {
                    emit_json(&report::tree_json(&t));
                } else {
                    println!(
                        "canonical tree: {} nodes, code {}",
                        t.node_count(),
                        t.canonical_code().to_hex()
                    );
                    for e in t.edges() {
                        println!(
                            "  {{{}}} -[{{{}}}]- {{{}}}",
                            t.label_names(t.node_label(e.a)).join(","),
                            t.label_names(e.label).join(","),
                            t.label_names(t.node_label(e.b)).join(","),
                        );
                    }
                }
            }
        }
        Cmd::Enumerate {
            common: c,
            max_extra,
        } => {
            let g = load(&c.path)?;
            let opts = ReportOptions {
                max_extra,
                ..Default::default()
            };
            let json = report::enumerate_json(&g, &opts.limits())?;
            if c.json {
                emit_json(&json);
            } else {
                println!("{} classes", json.count);
                for cl in &json.classes {
                    println!(
                        "  {} nodes={} reduced={} surviving={}",
                        cl.code, cl.nodes, cl.reduced, cl.surviving
                    );
                }
            }
        }
        Cmd::Spine {
            common: c,
            max_extra,
        } => {
            let g = load(&c.path)?;
            let opts = ReportOptions {
                max_extra,
                ..Default::default()
            };
            let sp = spine(&g, &opts.limits())?;
            if let Some(dot_path) = &c.dot {
                write_dot(dot_path, &dot::spine_dot(&sp))?;
            }
            let json = report::spine_json(&sp);
            if c.json {
                emit_json(&json);
            } else {
                println!(
                    "{} classes ({} reduced, {} surviving), dimension {}, slide graph connected: {}",
                    json.counts.classes,
                    json.counts.reduced,
                    json.counts.surviving,
                    json.dimension,
                    json.slide_graph.connected
                );
            }
        }
        Cmd::TwistOrbit {
            common: c,
            node_cap,
        } => {
            let g = load(&c.path)?;
            let orbit = twist_orbit(&g, node_cap)?;
            if let Some(dot_path) = &c.dot {
                write_dot(dot_path, &dot::orbit_dot(&orbit))?;
            }
            let json = report::twist_orbit_json(&orbit);
            if c.json {
                emit_json(&json);
            } else {
                println!(
                    "{} twist-equivalent graphs (truncated: {})",
                    json.count, json.truncated
                );
                for m in &json.members {
                    println!("--- {}\n{}", m.code, m.adg.trim_end());
                }
            }
        }
        Cmd::Stabilizer {
            common: c,
            max_extra,
        } => {
            let g = load(&c.path)?;
            let opts = ReportOptions {
                max_extra,
                ..Default::default()
            };
            let sp = spine(&g, &opts.limits())?;
            let json = report::stabilizers_json(&g, &sp)?;
            if c.json {
                emit_json(&json);
            } else {
                for s in &json.stabilizers {
                    let p = &s.presentation;
                    let rank = p
                        .free_abelian_rank
                        .map(|r| format!("free abelian of rank {r}"))
                        .unwrap_or_else(|| "inexact (symbolic free factors)".into());
                    println!(
                        "tree {}: {} generators, {} identifications, {}",
                        s.tree_code,
                        p.generators.len(),
                        p.identifications.len(),
                        rank
                    );
                }
            }
        }
        Cmd::Report {
            common: c,
            max_extra,
            node_cap,
        } => {
            let g = load(&c.path)?;
            let opts = ReportOptions {
                max_extra,
                node_cap,
                ..Default::default()
            };
            let json = report::run_report(&g, &opts)?;
            if let Some(dot_path) = &c.dot {
                write_dot(dot_path, &dot::chunk_dot(&g, &chunks::chunks(&g)?))?;
            }
            if c.json {
                emit_json(&json);
            } else {
                println!("code: {}", json.input.code);
                println!("chunks: {}", json.chunks.len());
                println!(
                    "spine: {} classes, dimension {}, slide connected {}",
                    json.spine.counts.classes, json.spine.dimension, json.spine.slide_connected
                );
                println!(
                    "twist orbit: {} graphs, census total {}",
                    json.twist_orbit.count, json.orbit_census.total
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("defspace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
