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

//! Helpers shared by the integration tests and the acceptance harness:
//! an independent certificate checker, a single-field mutator and a
//! brute-force edge-disjoint path packer.

#![allow(dead_code)]

use oddimm::certificate::{HostGraph, ImmersionCertificate};
use oddimm::Multigraph;
use rand::Rng;

/// Full check (terminals, simple paths, edge-disjoint, strong, odd,
/// complete) written against an adjacency matrix, sharing no code with the
/// library verifier.
pub fn reference_accepts(g: &Multigraph, cert: &ImmersionCertificate, t: usize) -> bool {
    let n = g.vertex_count();
    if HostGraph::from_graph(g) != cert.host {
        return false;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    if cert.t != t || cert.terminals.len() != t || cert.paths.len() != t * t.saturating_sub(1) / 2 {
        return false;
    }
    let mut is_terminal = vec![false; n];
    for &v in &cert.terminals {
        if v >= n || is_terminal[v] {
            return false;
        }
        is_terminal[v] = true;
    }
    let mut pair_seen = vec![vec![false; n]; n];
    let mut edge_used = vec![vec![false; n]; n];
    for p in &cert.paths {
        let [a, b] = p.pair;
        if a >= n || b >= n || a == b || !is_terminal[a] || !is_terminal[b] || pair_seen[a][b] {
            return false;
        }
        pair_seen[a][b] = true;
        pair_seen[b][a] = true;
        let vs = &p.vertices;
        if vs.len() < 2 || vs[0] != a || vs[vs.len() - 1] != b || vs.len() % 2 != 0 {
            return false;
        }
        let mut on = vec![false; n];
        for (k, &v) in vs.iter().enumerate() {
            if v >= n || on[v] {
                return false;
            }
            on[v] = true;
            if k > 0 && k + 1 < vs.len() && is_terminal[v] {
                return false;
            }
        }
        for w in vs.windows(2) {
            let (u, v) = (w[0], w[1]);
            if !adj[u][v] || edge_used[u][v] {
                return false;
            }
            edge_used[u][v] = true;
            edge_used[v][u] = true;
        }
    }
    true
}

fn pick<R: Rng>(rng: &mut R, n: usize) -> usize {
    rng.random_range(0..n.max(1))
}

/// Changes one field of `cert`: the order, one terminal, one pair entry,
/// one path vertex (replaced, dropped or inserted), a whole path (dropped,
/// duplicated or reversed), the orientation of a pair or one host edge. Returns a description.
pub fn mutate<R: Rng>(cert: &ImmersionCertificate, rng: &mut R) -> (ImmersionCertificate, String) {
    let mut c = cert.clone();
    let n = c.host.n;
    let np = c.paths.len();
    let kind = pick(rng, 11);
    let desc = match kind {
        0 => {
            c.t = if rng.random_bool(0.5) { c.t + 1 } else { c.t.saturating_sub(1) };
            format!("t -> {}", c.t)
        }
        1 => {
            let k = pick(rng, c.terminals.len());
            let v = pick(rng, n + 1);
            c.terminals[k] = v;
            format!("terminal {k} -> {v}")
        }
        2 => {
            let p = pick(rng, np);
            let side = pick(rng, 2);
            let v = pick(rng, n + 1);
            c.paths[p].pair[side] = v;
            format!("path {p} pair[{side}] -> {v}")
        }
        3 => {
            let p = pick(rng, np);
            let q = pick(rng, c.paths[p].vertices.len());
            let v = pick(rng, n + 1);
            c.paths[p].vertices[q] = v;
            format!("path {p} vertex {q} -> {v}")
        }
        4 => {
            let p = pick(rng, np);
            let q = pick(rng, c.paths[p].vertices.len());
            c.paths[p].vertices.remove(q);
            format!("path {p} drop vertex {q}")
        }
        5 => {
            let p = pick(rng, np);
            let q = pick(rng, c.paths[p].vertices.len() + 1);
            let v = pick(rng, n);
            c.paths[p].vertices.insert(q, v);
            format!("path {p} insert {v} at {q}")
        }
        6 => {
            let p = pick(rng, np);
            c.paths.remove(p);
            format!("drop path {p}")
        }
        7 => {
            let p = pick(rng, np);
            let dup = c.paths[p].clone();
            c.paths.push(dup);
            format!("duplicate path {p}")
        }
        8 => {
            let p = pick(rng, np);
            c.paths[p].vertices.reverse();
            format!("reverse path {p}")
        }
        9 => {
            let e = pick(rng, c.host.edges.len());
            c.host.edges.remove(e);
            format!("host drop edge {e}")
        }
        _ => {
            let p = pick(rng, np);
            c.paths[p].pair.swap(0, 1);
            format!("path {p} pair swapped")
        }
    };
    (c, desc)
}

/// Maximum number of pairwise edge-disjoint simple `x`-`y` paths by
/// enumerating all simple paths and packing them exhaustively.
pub fn brute_force_packing(g: &Multigraph, x: usize, y: usize) -> usize {
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut on = vec![false; g.vertex_count()];
    fn walk(g: &Multigraph, v: usize, y: usize, on: &mut [bool], edges: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if v == y {
            all.push(edges.clone());
            return;
        }
        on[v] = true;
        for &(w, e) in g.incident(v) {
            if !on[w] {
                edges.push(e);
                walk(g, w, y, on, edges, all);
                edges.pop();
            }
        }
        on[v] = false;
    }
    walk(g, x, y, &mut on, &mut Vec::new(), &mut all);
    fn pack(all: &[Vec<usize>], from: usize, used: &mut Vec<bool>) -> usize {
        let mut best = 0;
        for i in from..all.len() {
            if all[i].iter().all(|&e| !used[e]) {
                for &e in &all[i] {
                    used[e] = true;
                }
                best = best.max(1 + pack(all, i + 1, used));
                for &e in &all[i] {
                    used[e] = false;
                }
            }
        }
        best
    }
    pack(&all, 0, &mut vec![false; g.edge_count()])
}

/// Valid certificates with their hosts: constructions over part of the
/// bundled corpus, two lifts and one oracle result.
pub fn valid_pool() -> Vec<(Multigraph, ImmersionCertificate)> {
    use oddimm::construction::construct_immersion;
    use oddimm::graph::{generators, line_graph, multiply_edges};
    let mut pool = Vec::new();
    for e in oddimm::corpus::class_two_corpus().into_iter().step_by(3) {
        let cert = construct_immersion(&e.graph).expect("corpus constructs");
        pool.push((line_graph(&e.graph).line_graph, cert));
    }
    let c5 = generators::cycle(5);
    let base = construct_immersion(&c5).unwrap();
    for m in [2, 3] {
        let lifted = oddimm::lift::lift_certificate(&base, &c5, m).unwrap();
        pool.push((line_graph(&multiply_edges(&c5, m).unwrap()).line_graph, lifted));
    }
    let k4 = generators::complete(4);
    let r = oddimm::oracle::find_immersion(&k4, 4, oddimm::oracle::SearchFlags::STRONG_ODD, Default::default());
    pool.push((k4, r.outcome.certificate().unwrap().clone()));
    pool
}

#[derive(Debug, Default)]
pub struct FuzzTally {
    pub mutants: usize,
    pub detected: usize,
    pub equivalent: usize,
    /// Equivalent mutants the verifier rejected; a soundness-side mismatch.
    pub equivalent_rejected: usize,
    pub missed: Vec<String>,
}

/// Mutates certificates from `pool` until `target` mutants the reference
/// checker rejects have been produced, and records how the library
/// verifier judged each.
pub fn fuzz_verifier(pool: &[(Multigraph, ImmersionCertificate)], target: usize, seed: u64) -> FuzzTally {
    use oddimm::verify::{verify, VerifyFlags};
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut tally = FuzzTally::default();
    while tally.mutants < target {
        let (g, cert) = &pool[rng.random_range(0..pool.len())];
        let t = cert.t;
        let (mutant, desc) = mutate(cert, &mut rng);
        let accepted = verify(g, &mutant, VerifyFlags::full(t)).map(|r| r.passed()).unwrap_or(false);
        if reference_accepts(g, &mutant, t) {
            tally.equivalent += 1;
            if !accepted {
                tally.equivalent_rejected += 1;
            }
            continue;
        }
        tally.mutants += 1;
        if accepted {
            tally.missed.push(desc);
        } else {
            tally.detected += 1;
        }
    }
    tally
}
