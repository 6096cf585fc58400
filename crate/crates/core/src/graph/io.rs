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

//! Line-oriented multigraph text format.
//!
//! ```text
//! c optional comments
//! p mg <vertices> <edge lines>
//! e <u> <v> <multiplicity>
//! ```
//!
//! Vertices are 1-based in files. An edge line with multiplicity `k` expands
//! to `k` parallel edges with consecutive ids.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `p mg <n> <m>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge before header")]
    MissingHeader { line: usize },
    #[error("no header found")]
    Empty,
    #[error("line {line}: malformed edge, expected `e <u> <v> <mult>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: loop at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: multiplicity must be at least 1")]
    ZeroMultiplicity { line: usize },
    #[error("header declares {declared} edge lines, found {found}")]
    EdgeLineCount { declared: usize, found: usize },
    #[error("line {line}: unrecognized line")]
    UnknownLine { line: usize },
}

fn parse_numbers<'a, I: Iterator<Item = &'a str>>(tokens: I) -> Option<Vec<usize>> {
    tokens.map(|t| t.parse().ok()).collect()
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut graph: Option<Multigraph> = None;
    let mut declared = 0;
    let mut found = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            None => continue,
            Some(tok) if tok.starts_with('c') => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if tokens.next() != Some("mg") {
                    return Err(ParseError::MalformedHeader { line });
                }
                match parse_numbers(tokens).as_deref() {
                    Some(&[n, m]) => {
                        graph = Some(Multigraph::new(n));
                        declared = m;
                    }
                    _ => return Err(ParseError::MalformedHeader { line }),
                }
            }
            Some("e") => {
                let (u, v, mult) = match parse_numbers(tokens).as_deref() {
                    Some(&[u, v, mult]) => (u, v, mult),
                    _ => return Err(ParseError::MalformedEdge { line }),
                };
                if u == v {
                    return Err(ParseError::LoopEdge { line, vertex: u });
                }
                let g = graph.as_mut().ok_or(ParseError::MissingHeader { line })?;
                let n = g.vertex_count();
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
                    }
                }
                if mult == 0 {
                    return Err(ParseError::ZeroMultiplicity { line });
                }
                for _ in 0..mult {
                    g.add_edge(u - 1, v - 1).expect("checked above");
                }
                found += 1;
            }
            Some(_) => return Err(ParseError::UnknownLine { line }),
        }
    }
    let g = graph.ok_or(ParseError::Empty)?;
    if declared != found {
        return Err(ParseError::EdgeLineCount { declared, found });
    }
    Ok(g)
}

/// Serializes with parallel edges merged into multiplicities and edge lines
/// sorted by `(min endpoint, max endpoint)`.
pub fn serialize_graph(g: &Multigraph) -> String {
    write_graph(g, &[])
}

/// [`serialize_graph`] with leading `c` comment lines.
pub fn write_graph(g: &Multigraph, comments: &[String]) -> String {
    let mut merged: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in g.sorted_pairs() {
        *merged.entry((u, v)).or_default() += 1;
    }
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "c {l}");
        }
    }
    let _ = writeln!(out, "p mg {} {}", g.vertex_count(), merged.len());
    for ((u, v), mult) in merged {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, mult);
    }
    out
}

/// Reorders edges into the order a parse of the serialized form produces.
pub fn normalize(g: &Multigraph) -> Multigraph {
    Multigraph::from_edges(g.vertex_count(), g.sorted_pairs()).expect("same edges")
}
