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

use super::{GraphError, Multigraph, VertexId};

/// `B_m(G)`: every vertex becomes an independent set of `m` copies and every
/// edge a complete bipartite graph between copy sets.
///
/// Copy `k` of vertex `x` is blown vertex `m * x + k`, which matches the
/// line-graph numbering of [`multiply_edges`] so that `B_m(L(H))` sits inside
/// `L(mH)` under the identity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupMap {
    pub blown_graph: Multigraph,
    pub m: usize,
    origin: Vec<(VertexId, usize)>,
}

impl BlowupMap {
    pub fn copy(&self, x: VertexId, k: usize) -> VertexId {
        debug_assert!(k < self.m);
        self.m * x + k
    }

    /// `(original vertex, copy index)` of a blown vertex.
    pub fn origin(&self, v: VertexId) -> (VertexId, usize) {
        self.origin[v]
    }
}

pub fn blow_up(g: &Multigraph, m: usize) -> Result<BlowupMap, GraphError> {
    if m == 0 {
        return Err(GraphError::ZeroMultiplier);
    }
    let n = g.vertex_count();
    let mut blown = Multigraph::new(m * n);
    for &(x, y) in g.edges() {
        for a in 0..m {
            for b in 0..m {
                blown.add_edge(m * x + a, m * y + b)?;
            }
        }
    }
    let origin = (0..n).flat_map(|x| (0..m).map(move |k| (x, k))).collect();
    Ok(BlowupMap {
        blown_graph: blown,
        m,
        origin,
    })
}

/// `mH`: copy `k` of host edge `e` gets id `m * e + k`.
pub fn multiply_edges(h: &Multigraph, m: usize) -> Result<Multigraph, GraphError> {
    if m == 0 {
        return Err(GraphError::ZeroMultiplier);
    }
    let mut out = Multigraph::new(h.vertex_count());
    for &(u, v) in h.edges() {
        for _ in 0..m {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}
