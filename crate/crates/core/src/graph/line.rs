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

use std::collections::BTreeSet;

use super::{EdgeId, Multigraph, VertexId};

/// The simple line graph of a host multigraph together with the bijection
/// between host edges and line-graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    pub line_graph: Multigraph,
    pub edge_to_vertex: Vec<VertexId>,
    pub vertex_to_edge: Vec<EdgeId>,
}

impl LineGraphMap {
    pub fn vertex_of(&self, e: EdgeId) -> VertexId {
        self.edge_to_vertex[e]
    }

    pub fn edge_of(&self, v: VertexId) -> EdgeId {
        self.vertex_to_edge[v]
    }
}

/// Builds `L(host)`. Line-graph vertex `i` is host edge `i`; line-graph
/// edges are listed in lexicographic order of their (smaller, larger) pair.
pub fn line_graph(host: &Multigraph) -> LineGraphMap {
    let m = host.edge_count();
    let mut pairs = BTreeSet::new();
    for v in 0..host.vertex_count() {
        let inc = host.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                // e < f because incidence lists are sorted by edge id
                pairs.insert((e, f));
            }
        }
    }
    let line_graph = Multigraph::from_edges(m, pairs).expect("distinct edge ids");
    LineGraphMap {
        line_graph,
        edge_to_vertex: (0..m).collect(),
        vertex_to_edge: (0..m).collect(),
    }
}
