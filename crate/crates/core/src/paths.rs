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

//! Edge-disjoint path systems via unit-capacity flow.

use std::collections::VecDeque;

use thiserror::Error;

use crate::coloring::{self, ColoringError, NodeBudget};
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("endpoints must differ")]
    SameEndpoints,
    #[error("vertex {0} out of range")]
    BadVertex(VertexId),
    #[error("requested {requested} paths but the maximum degree is {max_degree}")]
    DegreeMismatch { requested: usize, max_degree: usize },
    #[error("graph is class 1, so no system is guaranteed")]
    ClassOne,
    #[error("no pair of vertices is joined by {0} edge-disjoint paths")]
    NoSystem(usize),
    #[error("operation requires a simple graph")]
    NotSimple,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A walk that repeats no edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Trail {
    pub fn is_simple(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDisjointPaths {
    pub count: usize,
    pub trails: Vec<Trail>,
}

/// Maximum number of pairwise edge-disjoint `x`-`y` trails, with the trails
/// read off the flow. Each undirected edge carries flow in at most one
/// direction; pushing against existing flow cancels it.
pub fn max_edge_disjoint_paths(
    h: &Multigraph,
    x: VertexId,
    y: VertexId,
) -> Result<EdgeDisjointPaths, PathError> {
    for v in [x, y] {
        if v >= h.vertex_count() {
            return Err(PathError::BadVertex(v));
        }
    }
    if x == y {
        return Err(PathError::SameEndpoints);
    }
    let n = h.vertex_count();
    // +1: flows from the first endpoint to the second, -1: reverse
    let mut flow = vec![0i8; h.edge_count()];
    let dir = |e: EdgeId, from: VertexId| if h.endpoints(e).0 == from { 1i8 } else { -1 };
    let mut count = 0;
    loop {
        let mut parent: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            if v == y {
                break;
            }
            for &(w, e) in h.incident(v) {
                if !seen[w] && flow[e] != dir(e, v) {
                    seen[w] = true;
                    parent[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[y] {
            break;
        }
        let mut v = y;
        while v != x {
            let e = parent[v].expect("reached vertex has a parent");
            let u = h.opposite(e, v);
            flow[e] += dir(e, u);
            v = u;
        }
        count += 1;
    }

    let mut used = vec![false; h.edge_count()];
    let mut trails = Vec::with_capacity(count);
    for _ in 0..count {
        let mut vertices = vec![x];
        let mut edges = Vec::new();
        let mut v = x;
        while v != y {
            let &(w, e) = h
                .incident(v)
                .iter()
                .find(|&&(_, e)| !used[e] && flow[e] == dir(e, v))
                .expect("flow conservation leaves an outgoing edge");
            used[e] = true;
            edges.push(e);
            vertices.push(w);
            v = w;
        }
        trails.push(Trail { vertices, edges });
    }
    Ok(EdgeDisjointPaths { count, trails })
}

/// Cuts out closed sub-walks: whenever a vertex repeats, everything since
/// its first visit is dropped.
pub fn shortcut_to_simple(trail: &Trail) -> Trail {
    let mut vertices: Vec<VertexId> = Vec::with_capacity(trail.vertices.len());
    let mut edges: Vec<EdgeId> = Vec::with_capacity(trail.edges.len());
    for (i, &v) in trail.vertices.iter().enumerate() {
        if let Some(pos) = vertices.iter().position(|&u| u == v) {
            vertices.truncate(pos + 1);
            edges.truncate(pos);
        } else {
            if i > 0 {
                edges.push(trail.edges[i - 1]);
            }
            vertices.push(v);
        }
    }
    Trail { vertices, edges }
}

/// Endpoints `x`, `y` and `d` pairwise edge-disjoint simple paths between
/// them, each stored as a vertex sequence from `x` to `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub x: VertexId,
    pub y: VertexId,
    pub paths: Vec<Vec<VertexId>>,
}

impl PathSystem {
    pub fn d(&self) -> usize {
        self.paths.len()
    }

    /// Internal vertex count of path `i`; the path has this many plus one
    /// edges.
    pub fn internal_len(&self, i: usize) -> usize {
        self.paths[i].len() - 2
    }

    /// Describes the first broken invariant, if any.
    pub fn check(&self, h: &Multigraph) -> Result<(), String> {
        let mut used = std::collections::HashSet::new();
        let mut direct = 0;
        for (i, p) in self.paths.iter().enumerate() {
            if p.len() < 2 || p[0] != self.x || *p.last().unwrap() != self.y {
                return Err(format!("path {i} has wrong endpoints"));
            }
            let mut sorted = p.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(format!("path {i} repeats a vertex"));
            }
            if p.len() == 2 {
                direct += 1;
            }
            for w in p.windows(2) {
                if !h.has_edge(w[0], w[1]) {
                    return Err(format!("path {i} uses non-edge {}-{}", w[0], w[1]));
                }
                if !used.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                    return Err(format!("edge {}-{} used twice", w[0], w[1]));
                }
            }
        }
        if h.is_simple() && direct > 1 {
            return Err("more than one direct edge".into());
        }
        Ok(())
    }
}

/// First pair `(x, y)` in lexicographic order joined by `d` edge-disjoint
/// paths, shortcut to simple paths. No hypothesis checks.
pub fn find_system(h: &Multigraph, d: usize) -> Option<PathSystem> {
    let n = h.vertex_count();
    for x in 0..n {
        if h.degree(x) < d {
            continue;
        }
        for y in x + 1..n {
            if h.degree(y) < d {
                continue;
            }
            let flow = max_edge_disjoint_paths(h, x, y).expect("valid distinct endpoints");
            if flow.count >= d {
                let paths = flow
                    .trails
                    .iter()
                    .take(d)
                    .map(|t| shortcut_to_simple(t).vertices)
                    .collect();
                return Some(PathSystem { x, y, paths });
            }
        }
    }
    None
}

/// Two vertices joined by `d` edge-disjoint paths in a simple graph with
/// maximum degree `d` and chromatic index `d + 1`.
pub fn thomassen_system(
    h: &Multigraph,
    d: usize,
    budget: NodeBudget,
) -> Result<PathSystem, PathError> {
    if !h.is_simple() {
        return Err(PathError::NotSimple);
    }
    let max_degree = h.max_degree();
    if max_degree != d {
        return Err(PathError::DegreeMismatch {
            requested: d,
            max_degree,
        });
    }
    if !coloring::is_class_two(h, budget)? {
        return Err(PathError::ClassOne);
    }
    find_system(h, d).ok_or(PathError::NoSystem(d))
}
