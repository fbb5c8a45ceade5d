//! Command-line front end: catalog generation, coloring census, Black-White
//! decisions, and export.

use crate::bwcolor::{all_cycles, is_2colorable_cycle, oracle_2colorable};
use crate::coloring::{classify_graph, enumerate_partitions, GraphColoringClass};
use crate::embedding::{graph6_canonical, graph6_decode, to_dot, PlaneTriangulation};
use crate::error::GraphError;
use crate::generator::CatalogSet;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "triangulata",
    about = "Structure and coloring toolkit for maximal planar graphs",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the catalog of minimum-degree-4 triangulations of order n.
    Generate {
        #[arg(long)]
        n: usize,
        /// Catalog directory (defaults to $TRIANGULATA_CATALOG or ./catalog).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Coloring census over a catalog order: per-graph partition counts and
    /// tree/cycle classification, as JSON lines plus a summary.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write JSONL here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide 2-colorability of one even cycle of one graph.
    Bwcheck {
        /// graph6 record ("-" reads stdin).
        graph6: String,
        /// Comma-separated cycle vertices.
        #[arg(long)]
        cycle: String,
    },
    /// Decide every even cycle of every catalog graph of order n, with the
    /// oracle agreement column.
    Bwcensus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Cap on enumerated cycle length (0 = no cap).
        #[arg(long, default_value_t = 0)]
        max_cycle_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a graph as DOT or normalized graph6.
    Export {
        /// graph6 record ("-" reads stdin).
        graph6: String,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Color the vertices by the partition with this index (census order).
        #[arg(long)]
        coloring: Option<usize>,
    },
}

#[derive(Serialize)]
struct CensusRow {
    code: String,
    n: usize,
    degree_sequence: String,
    partitions: usize,
    tree_count: usize,
    cycle_count: usize,
    divisible: bool,
    three_chromatic: bool,
    class: String,
}

#[derive(Serialize)]
struct BwRow {
    code: String,
    cycle: Vec<usize>,
    decision: bool,
    oracle: bool,
    agree: bool,
}

fn catalog_dir(arg: Option<PathBuf>) -> PathBuf {
    arg.or_else(|| std::env::var_os("TRIANGULATA_CATALOG").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("catalog"))
}

fn sha256_hex(data: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(data);
    format!("{:x}", h.finalize())
}

fn setup_jobs(jobs: usize) {
    if jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn read_graph(arg: &str) -> Result<PlaneTriangulation, GraphError> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| GraphError::Graph6(e.to_string()))?;
        s
    } else {
        arg.to_string()
    };
    graph6_decode(text.trim())
}

fn load_catalog_order(dir: &Path, n: usize) -> Result<Vec<PlaneTriangulation>, GraphError> {
    let path = dir.join(format!("n={n}.g6"));
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(|e| GraphError::Graph6(e.to_string()))?;
        return text.lines().filter(|l| !l.is_empty()).map(graph6_decode).collect();
    }
    let mut set = CatalogSet::new();
    let cat = set.get(n)?;
    Ok(cat.entries.iter().map(|e| e.graph.clone()).collect())
}

/// Write the catalog files for order `n`; returns (count, checksum).
pub fn write_catalog(dir: &Path, n: usize) -> Result<(usize, String), GraphError> {
    fs::create_dir_all(dir).map_err(|e| GraphError::Graph6(e.to_string()))?;
    let mut set = CatalogSet::new();
    let cat = set.get(n)?;
    let body = cat
        .graph6_lines()
        .into_iter()
        .map(|l| l + "\n")
        .collect::<String>();
    let path = dir.join(format!("n={n}.g6"));
    fs::write(&path, &body).map_err(|e| GraphError::Graph6(e.to_string()))?;
    let checksum = sha256_hex(body.as_bytes());
    // Update the manifest.
    let manifest_path = dir.join("manifest.json");
    let mut manifest: BTreeMap<String, serde_json::Value> = manifest_path
        .exists()
        .then(|| {
            fs::read_to_string(&manifest_path)
                .ok()
                .and_then(|t| serde_json::from_str(&t).ok())
        })
        .flatten()
        .unwrap_or_default();
    manifest.insert(
        format!("n={n}"),
        serde_json::json!({
            "count": cat.len(),
            "sha256": checksum,
            "command": format!("generate --n {n}"),
        }),
    );
    fs::write(
        &manifest_path,
        serde_json::to_string_pretty(&manifest).unwrap() + "\n",
    )
    .map_err(|e| GraphError::Graph6(e.to_string()))?;
    Ok((cat.len(), checksum))
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, GraphError> {
    match cli.command {
        Command::Generate { n, catalog, jobs } => {
            setup_jobs(jobs);
            let dir = catalog_dir(catalog);
            let (count, checksum) = write_catalog(&dir, n)?;
            println!(
                "{count} graph{} (order {n}) -> {} [sha256 {checksum}]",
                if count == 1 { "" } else { "s" },
                dir.join(format!("n={n}.g6")).display()
            );
            Ok(0)
        }
        Command::Census {
            n,
            catalog,
            jobs,
            out,
        } => {
            setup_jobs(jobs);
            let dir = catalog_dir(catalog);
            let graphs = load_catalog_order(&dir, n)?;
            let rows: Vec<CensusRow> = graphs
                .par_iter()
                .map(|g| {
                    let c = classify_graph(g);
                    CensusRow {
                        code: g.canonical_code().hex(),
                        n: g.n(),
                        degree_sequence: g.degree_sequence_string(),
                        partitions: c.partitions,
                        tree_count: c.tree_count,
                        cycle_count: c.cycle_count,
                        divisible: c.divisible,
                        three_chromatic: c.three_chromatic,
                        class: format!("{:?}", c.class),
                    }
                })
                .collect();
            let mut body = String::new();
            for r in &rows {
                body.push_str(&serde_json::to_string(r).unwrap());
                body.push('\n');
            }
            match out {
                Some(p) => fs::write(p, &body).map_err(|e| GraphError::Graph6(e.to_string()))?,
                None => print!("{body}"),
            }
            let starred = rows
                .iter()
                .filter(|r| r.divisible || r.three_chromatic)
                .count();
            let trees: usize = rows
                .iter()
                .filter(|r| !r.divisible && !r.three_chromatic)
                .map(|r| r.tree_count)
                .sum();
            let cycles: usize = rows
                .iter()
                .filter(|r| !r.divisible && !r.three_chromatic)
                .map(|r| r.cycle_count)
                .sum();
            eprintln!(
                "order {n}: {} graphs, {starred} starred, cycle-colorings {cycles}, tree-colorings {trees}",
                rows.len()
            );
            Ok(0)
        }
        Command::Bwcheck { graph6, cycle } => {
            let g = read_graph(&graph6)?;
            let cycle: Vec<usize> = cycle
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| GraphError::BadOperand(e.to_string()))
                })
                .collect::<Result<_, _>>()?;
            if cycle.len() % 2 != 0 {
                return Err(GraphError::BadOperand("cycle must be even".into()));
            }
            let (decision, cert) = is_2colorable_cycle(&g, &cycle)?;
            println!(
                "{}",
                serde_json::json!({
                    "code": g.canonical_code().hex(),
                    "cycle": cycle,
                    "decision": if decision { "2-colorable" } else { "not 2-colorable" },
                    "certificate": cert,
                })
            );
            Ok(0)
        }
        Command::Bwcensus {
            n,
            catalog,
            jobs,
            max_cycle_len,
            out,
        } => {
            setup_jobs(jobs);
            let dir = catalog_dir(catalog);
            let graphs = load_catalog_order(&dir, n)?;
            let cap = if max_cycle_len == 0 {
                None
            } else {
                Some(max_cycle_len)
            };
            let rows: Vec<BwRow> = graphs
                .par_iter()
                .flat_map(|g| {
                    let code = g.canonical_code().hex();
                    all_cycles(g, 4, cap)
                        .into_iter()
                        .filter(|c| c.len() % 2 == 0)
                        .map(|c| {
                            let (decision, _) = is_2colorable_cycle(g, &c).unwrap();
                            let oracle = oracle_2colorable(g, &c);
                            BwRow {
                                code: code.clone(),
                                cycle: c,
                                decision,
                                oracle,
                                agree: decision == oracle,
                            }
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut body = String::new();
            for r in &rows {
                body.push_str(&serde_json::to_string(r).unwrap());
                body.push('\n');
            }
            match out {
                Some(p) => fs::write(p, &body).map_err(|e| GraphError::Graph6(e.to_string()))?,
                None => print!("{body}"),
            }
            let disagreements = rows.iter().filter(|r| !r.agree).count();
            eprintln!(
                "order {n}: {} even cycles, {} disagreements",
                rows.len(),
                disagreements
            );
            Ok(if disagreements == 0 { 0 } else { 1 })
        }
        Command::Export {
            graph6,
            format,
            coloring,
        } => {
            let g = read_graph(&graph6)?;
            match format.as_str() {
                "g6" => {
                    println!("{}", graph6_canonical(&g));
                    Ok(0)
                }
                "dot" => {
                    match coloring {
                        None => print!("{}", to_dot(&g, None, None)),
                        Some(idx) => {
                            let parts = enumerate_partitions(&g);
                            let p = parts.get(idx).ok_or_else(|| {
                                GraphError::BadOperand(format!(
                                    "coloring index {idx} out of range ({} partitions)",
                                    parts.len()
                                ))
                            })?;
                            let f = |v: usize| p.color_of(v);
                            print!("{}", to_dot(&g, Some(&f), None));
                        }
                    }
                    Ok(0)
                }
                other => Err(GraphError::BadOperand(format!("unknown format {other}"))),
            }
        }
    }
}

/// Census summary used by the acceptance suite: non-starred (CN, TN) pairs
/// per degree sequence for one order.
pub fn census_rows(n: usize) -> Result<Vec<(String, GraphColoringClass, usize, usize, bool, bool)>, GraphError> {
    let mut set = CatalogSet::new();
    let cat = set.get(n)?;
    Ok(cat
        .entries
        .iter()
        .map(|e| {
            let c = classify_graph(&e.graph);
            (
                e.degree_sequence.clone(),
                c.class,
                c.cycle_count,
                c.tree_count,
                c.divisible,
                c.three_chromatic,
            )
        })
        .collect())
}
