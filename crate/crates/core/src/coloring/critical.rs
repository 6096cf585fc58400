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

use super::{chromatic_index, edge_coloring_with, ColoringError, NodeBudget};
use crate::graph::{EdgeSubgraph, Multigraph, VertexId};

/// Edge-critical subgraph of a class-2 simple graph.
///
/// Edges are examined in increasing id order and dropped whenever the rest
/// still needs Δ+1 colors. The result keeps the chromatic index and loses
/// it on every further single-edge deletion. Vertices left isolated are
/// dropped; `parent_vertex` and `parent_edge` map back to `h`.
pub fn critical_subgraph(h: &Multigraph, budget: NodeBudget) -> Result<EdgeSubgraph, ColoringError> {
    if !h.is_simple() {
        return Err(ColoringError::NotSimple);
    }
    let d = h.max_degree();
    if h.edge_count() == 0 || edge_coloring_with(h, d, budget)?.is_some() {
        return Err(ColoringError::ClassOne { max_degree: d });
    }
    reduce(h, d + 1, budget)
}

/// Chromatic-index-critical subgraph of any graph: same greedy deletion,
/// preserving `χ'(h)` whatever its class. A class-1 input reduces to a
/// critical subgraph of smaller maximum degree.
pub fn index_critical_subgraph(
    h: &Multigraph,
    budget: NodeBudget,
) -> Result<EdgeSubgraph, ColoringError> {
    let (k, _) = chromatic_index(h, budget)?;
    reduce(h, k, budget)
}

fn reduce(h: &Multigraph, k: usize, budget: NodeBudget) -> Result<EdgeSubgraph, ColoringError> {
    let mut keep = vec![true; h.edge_count()];
    if k == 0 {
        return Ok(h.edge_subgraph(&keep));
    }
    for e in 0..h.edge_count() {
        keep[e] = false;
        let rest = h.edge_subgraph(&keep);
        if edge_coloring_with(&rest.graph, k - 1, budget)?.is_some() {
            keep[e] = true;
        }
    }
    Ok(h.edge_subgraph(&keep))
}

/// A vertex with fewer than two neighbors of maximum degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VizingViolation {
    pub vertex: VertexId,
    pub max_degree_neighbors: usize,
}

/// Every vertex whose distinct neighbors include fewer than two vertices of
/// degree Δ. Empty on edge-critical graphs.
pub fn vizing_adjacency_audit(h: &Multigraph) -> Vec<VizingViolation> {
    let d = h.max_degree();
    (0..h.vertex_count())
        .filter_map(|v| {
            let count = h.neighbors(v).into_iter().filter(|&w| h.degree(w) == d).count();
            (count < 2).then_some(VizingViolation {
                vertex: v,
                max_degree_neighbors: count,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path, petersen, petersen_minus_vertex};

    fn b() -> NodeBudget {
        NodeBudget::default()
    }

    #[test]
    fn five_cycle_is_critical() {
        let sub = critical_subgraph(&cycle(5), b()).unwrap();
        assert_eq!(sub.graph.edge_count(), 5);
        assert_eq!(sub.parent_edge, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn pendant_edge_removed() {
        let mut h = cycle(5);
        let x = h.add_vertex();
        h.add_edge(0, x).unwrap();
        // class 1, so only the general reduction applies
        assert!(matches!(critical_subgraph(&h, b()), Err(ColoringError::ClassOne { .. })));
        // increasing-id deletion keeps the three edges at the degree-3 vertex
        let sub = index_critical_subgraph(&h, b()).unwrap();
        assert_eq!(sub.parent_edge, vec![0, 4, 5]);
        assert_eq!(chromatic_index(&sub.graph, b()).unwrap().0, 3);
        for e in 0..3 {
            assert_eq!(chromatic_index(&sub.graph.without_edge(e), b()).unwrap().0, 2);
        }
    }

    #[test]
    fn petersen_minus_vertex_is_critical() {
        let h = petersen_minus_vertex();
        let sub = critical_subgraph(&h, b()).unwrap();
        assert_eq!(sub.graph.edge_count(), h.edge_count());
        assert!(vizing_adjacency_audit(&h).is_empty());
    }

    #[test]
    fn petersen_reduces_to_smaller_critical_graph() {
        let sub = critical_subgraph(&petersen(), b()).unwrap();
        let g = &sub.graph;
        assert_eq!(chromatic_index(g, b()).unwrap().0, 4);
        for e in 0..g.edge_count() {
            assert_eq!(chromatic_index(&g.without_edge(e), b()).unwrap().0, 3);
        }
        assert!(vizing_adjacency_audit(g).is_empty());
    }

    #[test]
    fn class_one_rejected() {
        assert_eq!(
            critical_subgraph(&complete(4), b()),
            Err(ColoringError::ClassOne { max_degree: 3 })
        );
    }

    #[test]
    fn audit_flags_path_endpoints() {
        let v = vizing_adjacency_audit(&path(3));
        assert_eq!(v.iter().map(|x| x.vertex).collect::<Vec<_>>(), vec![0, 1, 2]);
        // the middle vertex has no neighbor of degree 2 either
        assert_eq!(v[1].max_degree_neighbors, 0);
    }
}
