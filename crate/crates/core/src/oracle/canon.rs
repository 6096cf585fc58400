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

//! Canonical labeling of small simple graphs and isomorphism-free
//! enumeration.
//!
//! Vertices are first split by stable color refinement. The labeling then
//! places vertices one at a time, cell by cell, keeping only the partial
//! orders whose upper-triangle adjacency bits (in graph6 column order) are
//! lexicographically largest. Every surviving full order yields the same
//! matrix, which is the canonical one.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{graph6, Multigraph};

/// Stable refinement colors, numbered canonically.
fn refine(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let before = color.iter().collect::<BTreeSet<_>>().len();
        color = next;
        if distinct.len() == before {
            return color;
        }
    }
}

/// `order[p]` is the vertex placed at position `p`.
pub fn canonical_order(g: &Multigraph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let color = refine(&adj);
    let mut cell_of_position: Vec<usize> = color.clone();
    cell_of_position.sort_unstable();
    let mut is_adj = vec![false; n * n];
    for v in 0..n {
        for &w in &adj[v] {
            is_adj[v * n + w] = true;
        }
    }
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for &cell in &cell_of_position {
        let mut best: Option<Vec<bool>> = None;
        let mut next = Vec::new();
        for prefix in &frontier {
            for v in 0..n {
                if color[v] != cell || prefix.contains(&v) {
                    continue;
                }
                let column: Vec<bool> = prefix.iter().map(|&u| is_adj[u * n + v]).collect();
                match best.as_ref().map(|b| column.cmp(b)) {
                    Some(std::cmp::Ordering::Less) => continue,
                    Some(std::cmp::Ordering::Greater) | None => {
                        best = Some(column);
                        next.clear();
                    }
                    Some(std::cmp::Ordering::Equal) => {}
                }
                let mut ext = prefix.clone();
                ext.push(v);
                next.push(ext);
            }
        }
        frontier = next;
    }
    frontier.swap_remove(0)
}

/// The graph relabeled by [`canonical_order`]. Isomorphic simple graphs
/// give identical edge lists.
pub fn canonical_graph(g: &Multigraph) -> Multigraph {
    let order = canonical_order(g);
    let mut pos = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let pairs = g.sorted_pairs().into_iter().map(|(u, v)| (pos[u], pos[v]));
    crate::graph::io::normalize(&Multigraph::from_edges(g.vertex_count(), pairs).expect("relabeling"))
}

/// graph6 string of the canonical relabeling; simple graphs only.
pub fn canonical_form(g: &Multigraph) -> Result<String, graph6::Graph6Error> {
    graph6::encode(&canonical_graph(g))
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, sorted by canonical graph6 string. Built by adding a vertex
/// with every possible neighborhood to each class on `n - 1` vertices.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Vec<Multigraph> {
    let mut level: BTreeMap<String, Multigraph> = BTreeMap::new();
    let empty = Multigraph::new(0);
    level.insert(canonical_form(&empty).expect("simple"), empty);
    for k in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..(1 << (k - 1)) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, v).expect("new vertex");
                    }
                }
                let c = canonical_graph(&h);
                next.entry(graph6::encode(&c).expect("simple")).or_insert(c);
            }
        }
        level = next;
    }
    level
        .into_values()
        .filter(|g| !connected_only || g.is_connected())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle, path, petersen};

    fn relabel(g: &Multigraph, perm: &[usize]) -> Multigraph {
        Multigraph::from_edges(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let p = petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_form(&p), canonical_form(&relabel(&p, &perm)));
        let q = path(5);
        assert_eq!(canonical_form(&q), canonical_form(&relabel(&q, &[4, 2, 0, 1, 3])));
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&relabel(&path(6), &[0, 1, 2, 3, 4, 5])));
    }

    #[test]
    fn known_class_counts() {
        // small graphs up to isomorphism
        let all: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, false).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| enumerate_graphs(n, true).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn separates_cospectral_pair() {
        // star K_{1,4} and C_4 plus isolated vertex
        let star = crate::graph::generators::star(4);
        let mut c4 = cycle(4);
        c4.add_vertex();
        assert_ne!(canonical_form(&star), canonical_form(&c4));
    }
}
