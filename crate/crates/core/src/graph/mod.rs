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

//! Loopless multigraphs with stable edge identities, and the operators built
//! on them: line graphs, blow-ups and constant edge multiplication.

mod blowup;
pub mod generators;
pub mod graph6;
pub mod io;
mod line;

pub use blowup::{blow_up, multiply_edges, BlowupMap};
pub use line::{line_graph, LineGraphMap};

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("multiplicity must be positive")]
    ZeroMultiplier,
}

/// A loopless multigraph. Edge `i` is the `i`-th entry of [`Multigraph::edges`];
/// parallel edges are distinct entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // (neighbor, edge id), sorted by edge id because edges are only appended
    incidence: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.incidence[u].push((v, id));
        self.incidence[v].push((u, id));
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident `(neighbor, edge id)` pairs in increasing edge id order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Distinct neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.incidence[v].iter().map(|&(w, _)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.incidence[u].iter().filter(|&&(w, _)| w == v).count()
    }

    /// Lowest-id edge joining `u` and `v`.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.incidence[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| {
            let mut seen = vec![false; self.n];
            self.incidence[v].iter().all(|&(w, _)| !std::mem::replace(&mut seen[w], true))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.incidence[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Undirected vertex pairs `(min, max)` of all edges, sorted, with repeats
    /// for parallel edges.
    pub fn sorted_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Same vertex count and the same multiset of undirected edges.
    pub fn same_structure(&self, other: &Multigraph) -> bool {
        self.n == other.n && self.sorted_pairs() == other.sorted_pairs()
    }

    /// Keeps the edges with `keep[e]` and drops vertices left isolated.
    pub fn edge_subgraph(&self, keep: &[bool]) -> EdgeSubgraph {
        assert_eq!(keep.len(), self.edge_count(), "keep mask length");
        let mut used = vec![false; self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep[e] {
                used[u] = true;
                used[v] = true;
            }
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut parent_vertex = Vec::new();
        for v in 0..self.n {
            if used[v] {
                new_id[v] = parent_vertex.len();
                parent_vertex.push(v);
            }
        }
        let mut graph = Multigraph::new(parent_vertex.len());
        let mut parent_edge = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep[e] {
                graph
                    .add_edge(new_id[u], new_id[v])
                    .expect("subgraph of a loopless graph is loopless");
                parent_edge.push(e);
            }
        }
        EdgeSubgraph {
            graph,
            parent_vertex,
            parent_edge,
        }
    }

    /// Copy with `e` removed; surviving edges keep their relative order.
    pub fn without_edge(&self, e: EdgeId) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for (f, &(u, v)) in self.edges.iter().enumerate() {
            if f != e {
                g.add_edge(u, v).expect("loopless");
            }
        }
        g
    }

    /// Copy with vertex `x` and its edges removed; higher vertex ids shift down.
    pub fn without_vertex(&self, x: VertexId) -> Multigraph {
        let relabel = |v: VertexId| if v > x { v - 1 } else { v };
        let mut g = Multigraph::new(self.n - 1);
        for &(u, v) in &self.edges {
            if u != x && v != x {
                g.add_edge(relabel(u), relabel(v)).expect("loopless");
            }
        }
        g
    }
}

/// A subgraph induced by an edge subset, remembering where its vertices and
/// edges came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubgraph {
    pub graph: Multigraph,
    pub parent_vertex: Vec<VertexId>,
    pub parent_edge: Vec<EdgeId>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_vertices() {
        let mut g = Multigraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::Loop(1)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(g.add_edge(0, 2), Ok(0));
        assert_eq!(g.add_edge(2, 0), Ok(1));
        assert_eq!(g.multiplicity(0, 2), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn edge_subgraph_drops_isolated_vertices() {
        let g = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = g.edge_subgraph(&[false, true, true]);
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.parent_vertex, vec![1, 2, 3]);
        assert_eq!(sub.parent_edge, vec![1, 2]);
        assert_eq!(sub.graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn without_vertex_relabels() {
        let g = generators::cycle(4);
        let h = g.without_vertex(0);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.sorted_pairs(), vec![(0, 1), (1, 2)]);
    }
}
