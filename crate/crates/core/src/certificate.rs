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

//! The certificate document shared by the constructor, the lifter, the
//! oracle and the verifier.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, Multigraph, VertexId};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("certificate host: {0}")]
    Host(#[from] GraphError),
}

/// Host graph as stored in a certificate: 0-based vertices, edges as sorted
/// `[u, v]` pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostGraph {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl HostGraph {
    pub fn from_graph(g: &Multigraph) -> Self {
        HostGraph {
            n: g.vertex_count(),
            edges: g.sorted_pairs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph, GraphError> {
        Multigraph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn matches(&self, g: &Multigraph) -> bool {
        self.to_graph().is_ok_and(|h| h.same_structure(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPath {
    pub pair: [VertexId; 2],
    pub vertices: Vec<VertexId>,
}

impl PairPath {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        let pair = [vertices[0], *vertices.last().expect("non-empty path")];
        PairPath { pair, vertices }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub strong: bool,
    pub totally_odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub case: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub events: Vec<String>,
}

/// Terminals of an immersed `K_t` and one path per unordered terminal pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionCertificate {
    pub host: HostGraph,
    pub t: usize,
    pub terminals: Vec<VertexId>,
    pub paths: Vec<PairPath>,
    pub properties: Properties,
    pub provenance: Provenance,
}

impl ImmersionCertificate {
    /// Certificate claiming a totally odd strong immersion; the claim is
    /// only a claim until the verifier has seen it.
    pub fn new(
        host: &Multigraph,
        terminals: Vec<VertexId>,
        paths: Vec<PairPath>,
        case: impl Into<String>,
    ) -> Self {
        ImmersionCertificate {
            host: HostGraph::from_graph(host),
            t: terminals.len(),
            terminals,
            paths,
            properties: Properties {
                strong: true,
                totally_odd: true,
            },
            provenance: Provenance {
                case: case.into(),
                events: Vec::new(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Path joining terminals `a` and `b`, oriented from `a`.
    pub fn path_between(&self, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
        self.paths.iter().find_map(|p| match p.pair {
            [x, y] if x == a && y == b => Some(p.vertices.clone()),
            [x, y] if x == b && y == a => Some(p.vertices.iter().rev().copied().collect()),
            _ => None,
        })
    }

    /// Relabels host vertices through `map` onto `new_host`.
    pub fn embed(&self, new_host: &Multigraph, map: impl Fn(VertexId) -> VertexId) -> Self {
        ImmersionCertificate {
            host: HostGraph::from_graph(new_host),
            t: self.t,
            terminals: self.terminals.iter().map(|&v| map(v)).collect(),
            paths: self
                .paths
                .iter()
                .map(|p| PairPath {
                    pair: [map(p.pair[0]), map(p.pair[1])],
                    vertices: p.vertices.iter().map(|&v| map(v)).collect(),
                })
                .collect(),
            properties: self.properties,
            provenance: self.provenance.clone(),
        }
    }
}
