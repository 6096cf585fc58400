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

//! Saturation-first vertex coloring: a greedy pass for upper bounds and an
//! exact backtracking `k`-colorability test.

use crate::graph::Multigraph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exceeded {
    pub nodes: u64,
}

struct Kernel {
    adj: Vec<Vec<usize>>,
    k: usize,
    color: Vec<usize>,
    // forbid[v * k + c] = number of neighbors of v colored c
    forbid: Vec<u32>,
    saturation: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

fn simple_adjacency(g: &Multigraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v)).collect()
}

impl Kernel {
    fn new(g: &Multigraph, k: usize, max_nodes: u64) -> Self {
        let n = g.vertex_count();
        Kernel {
            adj: simple_adjacency(g),
            k,
            color: vec![NONE; n],
            forbid: vec![0; n * k],
            saturation: vec![0; n],
            nodes: 0,
            max_nodes,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            let slot = &mut self.forbid[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = NONE;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            let slot = &mut self.forbid[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex with the most distinct neighbor colors, ties broken
    /// by degree and then by lowest id.
    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    (self.saturation[v], self.adj[v].len()) > (self.saturation[b], self.adj[b].len())
                }
            };
            if better {
                best = Some(v);
            }
        }
        best
    }

    fn search(&mut self, used: usize) -> Result<bool, Exceeded> {
        let Some(v) = self.select() else {
            return Ok(true);
        };
        if self.saturation[v] >= self.k {
            return Ok(false);
        }
        // colors are interchangeable, so a fresh color is only tried once
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.forbid[v * self.k + c] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Exceeded { nodes: self.nodes });
            }
            self.assign(v, c);
            if self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Exact test: a proper coloring with at most `k` colors, or `None`.
pub(crate) fn k_coloring(g: &Multigraph, k: usize, max_nodes: u64) -> Result<Option<Vec<usize>>, Exceeded> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut kernel = Kernel::new(g, k, max_nodes);
    if kernel.search(0)? {
        Ok(Some(kernel.color))
    } else {
        Ok(None)
    }
}

/// Single saturation-first pass, always succeeds.
pub(crate) fn greedy_coloring(g: &Multigraph) -> Vec<usize> {
    let k = g.max_degree() + 1;
    let mut kernel = Kernel::new(g, k, u64::MAX);
    while let Some(v) = kernel.select() {
        let c = (0..k)
            .find(|&c| kernel.forbid[v * k + c] == 0)
            .expect("max degree + 1 colors always suffice");
        kernel.assign(v, c);
    }
    kernel.color
}

/// Size of the best clique found by growing greedily from each vertex.
pub(crate) fn greedy_clique_size(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    let adj = simple_adjacency(g);
    let mut is_adj = vec![false; n * n];
    for v in 0..n {
        for &w in &adj[v] {
            is_adj[v * n + w] = true;
        }
    }
    let mut best = usize::from(n > 0);
    for v in 0..n {
        let mut cand = adj[v].clone();
        cand.sort_by_key(|&w| std::cmp::Reverse(adj[w].len()));
        let mut clique = vec![v];
        for w in cand {
            if clique.iter().all(|&u| is_adj[u * n + w]) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best
}
