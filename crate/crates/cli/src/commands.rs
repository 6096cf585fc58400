// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::Path;
use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use oddimm::coloring::{
    chromatic_index, chromatic_number, critical_subgraph, index_critical_subgraph, ColoringError,
    NodeBudget,
};
use oddimm::construction::{construct_immersion_with, ConstructOptions, ConstructionError};
use oddimm::corpus::parse_corpus;
use oddimm::graph::generators::{flower, random_bounded_degree, FlowerParams};
use oddimm::graph::io::{parse_graph, write_graph};
use oddimm::graph::{line_graph, multiply_edges, Multigraph};
use oddimm::lift::{lift_certificate, LiftError};
use oddimm::oracle::canon::enumerate_graphs;
use oddimm::oracle::{
    find_immersion, find_immersion_with_terminals, scan_conjecture, SearchBudget, SearchFlags,
    SearchOutcome,
};
use oddimm::paths::{thomassen_system, PathError};
use oddimm::verify::{verify, VerifyError, VerifyFlags};

use crate::input::{emit, read_certificate, read_graph, read_text};
use crate::{Cli, Command, Format, HostArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Fail(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Fail(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            ColoringError::NotSimple => CliError::Usage(e.to_string()),
            ColoringError::ClassOne { .. } => CliError::Fail(e.to_string()),
        }
    }
}

impl From<PathError> for CliError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::Coloring(c) => c.into(),
            PathError::NotSimple | PathError::BadVertex(_) | PathError::SameEndpoints => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Fail(e.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Coloring(c) => c.into(),
            ConstructionError::Paths(p) => p.into(),
            ConstructionError::NotSimple => CliError::Usage(e.to_string()),
            ConstructionError::Unrepairable {
                budget_exhausted: true,
                ..
            } => CliError::Budget(e.to_string()),
            _ => CliError::Fail(e.to_string()),
        }
    }
}

impl From<LiftError> for CliError {
    fn from(e: LiftError) -> Self {
        match e {
            LiftError::Graph(_) | LiftError::NotSimple => CliError::Usage(e.to_string()),
            _ => CliError::Fail(e.to_string()),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn graph_json(g: &Multigraph) -> Value {
    json!({ "n": g.vertex_count(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
}

fn graph_doc(g: &Multigraph, comments: &[String], format: Format, extra: Value) -> String {
    match format {
        Format::Text => write_graph(g, comments),
        Format::Json => {
            let mut doc = json!({ "graph": graph_json(g) });
            if let (Value::Object(d), Value::Object(e)) = (&mut doc, extra) {
                d.extend(e);
            }
            pretty(&doc)
        }
    }
}

fn search_budget(cli: &Cli, time_limit: Option<f64>) -> Result<SearchBudget, CliError> {
    let time_limit = match time_limit {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(CliError::Usage(format!("time limit must be positive, got {s}")))
        }
        s => s.map(Duration::from_secs_f64),
    };
    Ok(SearchBudget {
        max_nodes: cli.budget,
        time_limit,
        ..SearchBudget::default()
    })
}

/// Host graph for `verify` and `search`: the file itself, or `L(mH)`.
fn host_graph(args: &HostArgs) -> Result<Multigraph, CliError> {
    let g = read_graph(&args.graph)?;
    if args.multiply != 1 && !args.line {
        return Err(CliError::Usage("--multiply needs --line".into()));
    }
    if !args.line {
        return Ok(g);
    }
    let h = multiply_edges(&g, args.multiply).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(line_graph(&h).line_graph)
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let nodes = NodeBudget {
        max_nodes: cli.budget,
    };
    let format = cli.format;
    match &cli.command {
        Command::Linegraph { graph, multiply } => {
            let h = read_graph(graph)?;
            let h = multiply_edges(&h, *multiply).map_err(|e| CliError::Usage(e.to_string()))?;
            let map = line_graph(&h);
            let pairs: Vec<[usize; 2]> = map
                .vertex_to_edge
                .iter()
                .map(|&e| {
                    let (u, v) = h.endpoints(e);
                    [u, v]
                })
                .collect();
            let comments: Vec<String> = pairs
                .iter()
                .enumerate()
                .map(|(i, [u, v])| format!("vertex {} edge {} {}", i + 1, u + 1, v + 1))
                .collect();
            let extra = json!({ "vertex_to_edge": map.vertex_to_edge, "edge_endpoints": pairs });
            print!("{}", graph_doc(&map.line_graph, &comments, format, extra));
            Ok(0)
        }
        Command::ChiIndex { graph } => {
            let h = read_graph(graph)?;
            let (k, coloring) = chromatic_index(&h, nodes)?;
            let d = h.max_degree();
            let class = (h.is_simple() && h.edge_count() > 0).then_some(if k == d { 1 } else { 2 });
            match format {
                Format::Text => {
                    print!("chromatic-index {k}\nmax-degree {d}\n");
                    if let Some(c) = class {
                        println!("class {c}");
                    }
                    print!("{}", coloring.to_text());
                }
                Format::Json => print!(
                    "{}",
                    pretty(&json!({
                        "chromatic_index": k, "max_degree": d, "class": class, "colors": coloring.colors,
                    }))
                ),
            }
            Ok(0)
        }
        Command::Chi { graph } => {
            let g = read_graph(graph)?;
            let (k, coloring) = chromatic_number(&g, nodes)?;
            match format {
                Format::Text => print!("chromatic-number {k}\n{}", coloring.to_text()),
                Format::Json => print!(
                    "{}",
                    pretty(&json!({ "chromatic_number": k, "colors": coloring.colors }))
                ),
            }
            Ok(0)
        }
        Command::Critical { graph, any_class } => {
            let h = read_graph(graph)?;
            let sub = if *any_class {
                index_critical_subgraph(&h, nodes)?
            } else {
                critical_subgraph(&h, nodes)?
            };
            let mut comments: Vec<String> = sub
                .parent_vertex
                .iter()
                .enumerate()
                .map(|(i, p)| format!("vertex {} parent {}", i + 1, p + 1))
                .collect();
            comments.extend(
                sub.parent_edge.iter().enumerate().map(|(i, p)| format!("edge {i} parent {p}")),
            );
            let extra = json!({ "parent_vertex": sub.parent_vertex, "parent_edge": sub.parent_edge });
            print!("{}", graph_doc(&sub.graph, &comments, format, extra));
            Ok(0)
        }
        Command::Thomassen { graph } => {
            let h = read_graph(graph)?;
            let s = thomassen_system(&h, h.max_degree(), nodes)?;
            match format {
                Format::Text => {
                    print!("x {}\ny {}\n", s.x, s.y);
                    for (i, p) in s.paths.iter().enumerate() {
                        let vs: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                        println!("path {i} {}", vs.join(" "));
                    }
                }
                Format::Json => print!(
                    "{}",
                    pretty(&json!({ "x": s.x, "y": s.y, "paths": s.paths }))
                ),
            }
            Ok(0)
        }
        Command::Construct { graph, output } => {
            let h = read_graph(graph)?;
            let opts = ConstructOptions {
                coloring: nodes,
                repair: search_budget(cli, None)?,
            };
            let cert = construct_immersion_with(&h, opts)?;
            for e in &cert.provenance.events {
                log::info!("{e}");
            }
            emit(&cert.to_json(), output.as_deref())?;
            Ok(0)
        }
        Command::Blowup {
            graph,
            cert,
            m,
            output,
        } => {
            let h = read_graph(graph)?;
            let c = read_certificate(cert)?;
            if *m == 0 {
                return Err(CliError::Usage("-m must be at least 1".into()));
            }
            let lifted = lift_certificate(&c, &h, *m)?;
            emit(&lifted.to_json(), output.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            host,
            cert,
            props,
            t,
        } => {
            let g = host_graph(host)?;
            let c = read_certificate(cert)?;
            let claimed = VerifyFlags::claimed(&c);
            let (strong, totally_odd) = props.resolve(claimed.strong, claimed.totally_odd);
            let flags = VerifyFlags {
                immersion: true,
                strong,
                totally_odd,
                clique_order: Some(t.unwrap_or(c.t)),
            };
            match verify(&g, &c, flags) {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", report.to_text()),
                        Format::Json => print!(
                            "{}",
                            pretty(&serde_json::to_value(&report).expect("report serializes"))
                        ),
                    }
                    Ok(if report.passed() { 0 } else { 1 })
                }
                Err(VerifyError::HostMismatch) => {
                    let msg = VerifyError::HostMismatch.to_string();
                    match format {
                        Format::Text => print!("FAIL host: {msg}\noverall FAIL\n"),
                        Format::Json => print!(
                            "{}",
                            pretty(&json!({ "checks": [], "host_mismatch": true, "overall": false }))
                        ),
                    }
                    Ok(1)
                }
                Err(e) => Err(CliError::Usage(e.to_string())),
            }
        }
        Command::Search {
            host,
            t,
            terminals,
            props,
            time_limit,
            output,
        } => {
            let g = host_graph(host)?;
            let (strong, totally_odd) = props.resolve(true, true);
            let flags = SearchFlags {
                strong,
                totally_odd,
            };
            let budget = search_budget(cli, *time_limit)?;
            let result = if terminals.is_empty() {
                let t = t.expect("clap requires --t without --terminals");
                find_immersion(&g, t, flags, budget)
            } else {
                if let Some(t) = t {
                    if *t != terminals.len() {
                        return Err(CliError::Usage(format!(
                            "--t {t} disagrees with {} terminals",
                            terminals.len()
                        )));
                    }
                }
                let mut sorted = terminals.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != terminals.len() || sorted.iter().any(|&v| v >= g.vertex_count()) {
                    return Err(CliError::Usage(
                        "terminals must be distinct vertices of the host".into(),
                    ));
                }
                find_immersion_with_terminals(&g, terminals, flags, budget)
            };
            let (label, code) = match &result.outcome {
                SearchOutcome::Found(_) => ("found", 0),
                SearchOutcome::ExhaustedNo => ("exhausted-no", 1),
                SearchOutcome::BudgetOut => ("budget-out", 3),
            };
            let cert = result.outcome.certificate();
            if let (Some(c), Some(path)) = (cert, output.as_deref()) {
                emit(&c.to_json(), Some(path))?;
            }
            match format {
                Format::Text => match (cert, output) {
                    (Some(c), None) => print!("{}", c.to_json()),
                    _ => println!("{label} nodes={}", result.nodes),
                },
                Format::Json => {
                    let mut doc = json!({ "outcome": label, "nodes": result.nodes });
                    if let (Some(c), None) = (cert, output) {
                        doc["certificate"] = serde_json::to_value(c).expect("certificate serializes");
                    }
                    print!("{}", pretty(&doc));
                }
            }
            Ok(code)
        }
        Command::Scan {
            corpus,
            generate,
            random,
            vertices,
            seed,
            line,
            workers,
            all,
            props,
            time_limit,
        } => {
            let mut graphs = Vec::new();
            for path in corpus {
                graphs.extend(read_corpus_file(path)?);
            }
            if let Some(n) = generate {
                for k in 1..=*n {
                    graphs.extend(enumerate_graphs(k, !*all));
                }
            }
            if let Some(count) = random {
                graphs.extend(sample_graphs(*count, *vertices, *seed));
            }
            if *line {
                graphs = graphs.iter().map(|g| line_graph(g).line_graph).collect();
            }
            let (strong, totally_odd) = props.resolve(true, true);
            let flags = SearchFlags {
                strong,
                totally_odd,
            };
            let budget = search_budget(cli, *time_limit)?;
            let workers = workers.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            });
            log::info!("scanning {} graphs on {workers} workers", graphs.len());
            let ledger = scan_conjecture(&graphs, flags, budget, workers.max(1));
            match format {
                Format::Text => print!("{}", ledger.to_text()),
                Format::Json => print!(
                    "{}",
                    pretty(&serde_json::to_value(&ledger).expect("ledger serializes"))
                ),
            }
            Ok(if ledger.counterexample.is_some() {
                1
            } else if ledger.count(oddimm::oracle::ScanOutcome::BudgetOut) > 0 {
                3
            } else {
                0
            })
        }
        Command::Flower {
            t,
            padding,
            no_parity_fix,
        } => {
            if *t < 3 {
                return Err(CliError::Usage("flower needs t >= 3".into()));
            }
            let f = flower(
                *t,
                FlowerParams {
                    parity_fix: !*no_parity_fix,
                    padding: *padding,
                },
            );
            let terms: Vec<String> = f.terminals.iter().map(|v| (v + 1).to_string()).collect();
            let comments = vec![
                format!("center {}", f.center + 1),
                format!("terminals {}", terms.join(" ")),
            ];
            let strands: Vec<Value> = f
                .strands
                .iter()
                .map(|s| json!({ "leaf": s.leaf, "partner": s.partner, "vertices": s.vertices }))
                .collect();
            let extra = json!({ "center": f.center, "terminals": f.terminals, "strands": strands });
            print!("{}", graph_doc(&f.graph, &comments, format, extra));
            Ok(0)
        }
    }
}

/// graph6 lines, or a whole file in the text format.
fn read_corpus_file(path: &Path) -> Result<Vec<Multigraph>, CliError> {
    let text = read_text(path)?;
    if text.lines().any(|l| l.trim_start().starts_with("p ")) {
        return parse_graph(&text)
            .map(|g| vec![g])
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
    }
    let mut out = Vec::new();
    for entry in parse_corpus(&text) {
        match entry {
            Ok(e) => out.push(e.graph),
            Err(e) => log::warn!("{}: skipping {e}", path.display()),
        }
    }
    Ok(out)
}

/// Random simple graphs with a uniform edge count, from a seeded stream.
fn sample_graphs(count: usize, n: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_edges = n * n.saturating_sub(1) / 2;
    (0..count)
        .map(|_| {
            let m = rng.random_range(0..=max_edges);
            random_bounded_degree(n, n.saturating_sub(1).max(1), m, &mut rng)
        })
        .collect()
}
