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

//! Exact chromatic number and chromatic index, edge-critical reduction and
//! the Vizing adjacency audit.
//!
//! Edge coloring is solved as vertex coloring of the line graph, so one
//! exact kernel serves both problems.

mod critical;
mod dsatur;

pub use critical::{critical_subgraph, index_critical_subgraph, vizing_adjacency_audit, VizingViolation};

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{line_graph, Multigraph};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

/// Upper limit on branch nodes for one exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeBudget {
    pub max_nodes: u64,
}

impl Default for NodeBudget {
    fn default() -> Self {
        NodeBudget {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("search budget exceeded after {nodes} branch nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("graph is class 1 (chromatic index equals maximum degree {max_degree})")]
    ClassOne { max_degree: usize },
    #[error("operation requires a simple graph")]
    NotSimple,
}

impl From<dsatur::Exceeded> for ColoringError {
    fn from(e: dsatur::Exceeded) -> Self {
        ColoringError::BudgetExceeded { nodes: e.nodes }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl EdgeColoring {
    pub fn is_proper(&self, h: &Multigraph) -> bool {
        self.colors.len() == h.edge_count()
            && self.colors.iter().all(|&c| c < self.palette)
            && (0..h.vertex_count()).all(|v| {
                let mut seen = vec![false; self.palette];
                h.incident(v)
                    .iter()
                    .all(|&(_, e)| !std::mem::replace(&mut seen[self.colors[e]], true))
            })
    }

    pub fn to_text(&self) -> String {
        witness_text(&self.colors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl VertexColoring {
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| c < self.palette)
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn to_text(&self) -> String {
        witness_text(&self.colors)
    }
}

fn witness_text(colors: &[usize]) -> String {
    let mut out = String::new();
    for (id, c) in colors.iter().enumerate() {
        let _ = writeln!(out, "color {id} {c}");
    }
    out
}

/// Compacts colors to `0..palette` in order of first appearance.
fn compact(colors: Vec<usize>) -> (Vec<usize>, usize) {
    let mut remap = std::collections::HashMap::new();
    let colors: Vec<usize> = colors
        .into_iter()
        .map(|c| {
            let next = remap.len();
            *remap.entry(c).or_insert(next)
        })
        .collect();
    let palette = remap.len();
    (colors, palette)
}

pub fn chromatic_number(
    g: &Multigraph,
    budget: NodeBudget,
) -> Result<(usize, VertexColoring), ColoringError> {
    let (mut best, mut palette) = compact(dsatur::greedy_coloring(g));
    let lower = dsatur::greedy_clique_size(g);
    while palette > lower {
        match dsatur::k_coloring(g, palette - 1, budget.max_nodes)? {
            Some(colors) => {
                (best, palette) = compact(colors);
            }
            None => break,
        }
    }
    Ok((
        palette,
        VertexColoring {
            colors: best,
            palette,
        },
    ))
}

/// Number of colors used by one saturation-first greedy pass; an upper
/// bound on the chromatic number that needs no search.
pub fn greedy_color_count(g: &Multigraph) -> usize {
    compact(dsatur::greedy_coloring(g)).1
}

/// Proper edge coloring with at most `k` colors, if one exists.
pub fn edge_coloring_with(
    h: &Multigraph,
    k: usize,
    budget: NodeBudget,
) -> Result<Option<EdgeColoring>, ColoringError> {
    // each color class is a matching, so more than k * floor(n/2) edges
    // cannot be covered
    let active = (0..h.vertex_count()).filter(|&v| h.degree(v) > 0).count();
    if h.edge_count() > k * (active / 2) && h.edge_count() > 0 {
        return Ok(None);
    }
    let lg = line_graph(h).line_graph;
    Ok(dsatur::k_coloring(&lg, k, budget.max_nodes)?.map(|colors| EdgeColoring {
        colors,
        palette: k,
    }))
}

/// Exact chromatic index with a witness.
///
/// Simple graphs only need a Δ-colorability test since the answer is Δ or
/// Δ+1. Multigraphs are searched downward from a greedy upper bound.
pub fn chromatic_index(
    h: &Multigraph,
    budget: NodeBudget,
) -> Result<(usize, EdgeColoring), ColoringError> {
    let d = h.max_degree();
    if h.edge_count() == 0 {
        return Ok((
            0,
            EdgeColoring {
                colors: Vec::new(),
                palette: 0,
            },
        ));
    }
    if h.is_simple() {
        if let Some(c) = edge_coloring_with(h, d, budget)? {
            return Ok((d, c));
        }
        let c = edge_coloring_with(h, d + 1, budget)?
            .expect("every simple graph is (max degree + 1)-edge-colorable");
        return Ok((d + 1, c));
    }
    let lg = line_graph(h).line_graph;
    let (mut best, mut palette) = compact(dsatur::greedy_coloring(&lg));
    while palette > d {
        match edge_coloring_with(h, palette - 1, budget)? {
            Some(c) => {
                (best, palette) = compact(c.colors);
            }
            None => break,
        }
    }
    Ok((
        palette,
        EdgeColoring {
            colors: best,
            palette,
        },
    ))
}

/// True when the simple graph `h` needs Δ+1 colors.
pub fn is_class_two(h: &Multigraph, budget: NodeBudget) -> Result<bool, ColoringError> {
    if !h.is_simple() {
        return Err(ColoringError::NotSimple);
    }
    if h.edge_count() == 0 {
        return Ok(false);
    }
    Ok(edge_coloring_with(h, h.max_degree(), budget)?.is_none())
}
