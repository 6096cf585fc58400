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

//! Fixture graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Multigraph, VertexId};

pub fn path(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete(n: usize) -> Multigraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Multigraph::from_edges(n, edges).expect("valid clique")
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
    Multigraph::from_edges(a + b, edges).expect("valid biclique")
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Multigraph {
    Multigraph::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("valid star")
}

/// Circulant graph on `n` vertices joining `i` to `i ± s` for every jump `s`.
pub fn circulant(n: usize, jumps: &[usize]) -> Multigraph {
    let mut g = Multigraph::new(n);
    for &s in jumps {
        assert!(s > 0 && 2 * s <= n, "jump {s} out of range");
        for i in 0..n {
            let j = (i + s) % n;
            if 2 * s == n && j < i {
                continue;
            }
            g.add_edge(i, j).expect("valid circulant");
        }
    }
    g
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Multigraph::from_edges(10, edges).expect("valid Petersen graph")
}

pub fn petersen_minus_vertex() -> Multigraph {
    petersen().without_vertex(0)
}

/// `K_4` with one edge subdivided: 5 vertices, 7 edges, overfull.
pub fn subdivided_k4() -> Multigraph {
    Multigraph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])
        .expect("valid graph")
}

/// Cubic graph on 10 vertices made of two copies of [`subdivided_k4`] whose
/// subdivision vertices are joined by a bridge.
pub fn cubic_with_bridge() -> Multigraph {
    let half = subdivided_k4();
    let mut g = Multigraph::new(10);
    for offset in [0, 5] {
        for &(u, v) in half.edges() {
            g.add_edge(u + offset, v + offset).expect("valid");
        }
    }
    g.add_edge(4, 9).expect("valid");
    g
}

/// Random simple graph on `n` vertices with maximum degree at most
/// `max_degree`, adding up to `target_edges` edges in random order.
pub fn random_bounded_degree<R: Rng>(
    n: usize,
    max_degree: usize,
    target_edges: usize,
    rng: &mut R,
) -> Multigraph {
    let mut pairs: Vec<(VertexId, VertexId)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Multigraph::new(n);
    for (u, v) in pairs {
        if g.edge_count() == target_edges {
            break;
        }
        if g.degree(u) < max_degree && g.degree(v) < max_degree {
            g.add_edge(u, v).expect("valid");
        }
    }
    g
}

/// One strand of a [`Flower`]: the subdivided multiedge between a leaf and
/// the center that carries the connection to `partner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub leaf: VertexId,
    pub partner: VertexId,
    /// From the leaf to the center, both included.
    pub vertices: Vec<VertexId>,
}

/// Planar graph containing `K_t` as a totally odd strong immersion.
///
/// A star with `t` leaves has each edge replaced by `t - 1` parallel edges,
/// each subdivided once. The skeleton has even leaf-to-leaf routes, so the
/// parity-corrected variant subdivides the lower leaf's strand of every pair
/// once more; `padding` adds `2 * padding` further subdivision vertices to
/// every strand without changing parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flower {
    pub graph: Multigraph,
    pub center: VertexId,
    pub terminals: Vec<VertexId>,
    pub strands: Vec<Strand>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowerParams {
    pub parity_fix: bool,
    pub padding: usize,
}

impl Default for FlowerParams {
    fn default() -> Self {
        FlowerParams {
            parity_fix: true,
            padding: 0,
        }
    }
}

pub fn flower(t: usize, params: FlowerParams) -> Flower {
    assert!(t >= 3, "flower needs at least 3 leaves");
    let center = 0;
    let terminals: Vec<VertexId> = (1..=t).collect();
    let mut graph = Multigraph::new(t + 1);
    let mut strands = Vec::new();
    for &leaf in &terminals {
        for &partner in &terminals {
            if partner == leaf {
                continue;
            }
            let mut inner = 1 + 2 * params.padding;
            if params.parity_fix && leaf < partner {
                inner += 1;
            }
            let mut vertices = vec![leaf];
            for _ in 0..inner {
                vertices.push(graph.add_vertex());
            }
            vertices.push(center);
            for w in vertices.windows(2) {
                graph.add_edge(w[0], w[1]).expect("valid strand");
            }
            strands.push(Strand {
                leaf,
                partner,
                vertices,
            });
        }
    }
    Flower {
        graph,
        center,
        terminals,
        strands,
    }
}

impl Flower {
    /// Leaf-center-leaf route for the pair `a < b`.
    pub fn route(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        let strand = |leaf, partner| {
            self.strands
                .iter()
                .find(|s| s.leaf == leaf && s.partner == partner)
                .expect("strand exists")
        };
        let mut out = strand(a, b).vertices.clone();
        let back = &strand(b, a).vertices;
        out.extend(back.iter().rev().skip(1));
        out
    }
}
