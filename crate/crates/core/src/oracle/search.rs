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

use std::time::Instant;

use super::{SearchBudget, SearchFlags, SearchOutcome, SearchResult};
use crate::certificate::{ImmersionCertificate, PairPath};
use crate::graph::{EdgeId, Multigraph, VertexId};

// paths counted per pair when choosing which pair to route next
const COUNT_CAP: usize = 8;

struct OutOfBudget;

struct Searcher<'a> {
    g: &'a Multigraph,
    flags: SearchFlags,
    budget: SearchBudget,
    deadline: Option<Instant>,
    nodes: u64,
    incomplete: bool,
    used: Vec<bool>,
    is_terminal: Vec<bool>,
    on_path: Vec<bool>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Multigraph, flags: SearchFlags, budget: SearchBudget) -> Self {
        Searcher {
            g,
            flags,
            budget,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            nodes: 0,
            incomplete: false,
            used: vec![false; g.edge_count()],
            is_terminal: vec![false; g.vertex_count()],
            on_path: vec![false; g.vertex_count()],
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(OutOfBudget);
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(OutOfBudget);
                }
            }
        }
        Ok(())
    }

    /// Simple `a`-`b` paths over unused edges honoring the flags, as vertex
    /// sequences. Stops after `cap` paths and reports whether it stopped
    /// early.
    fn paths(&mut self, a: VertexId, b: VertexId, cap: usize) -> Result<(Vec<Vec<VertexId>>, bool), OutOfBudget> {
        let mut out = Vec::new();
        let mut stack = vec![a];
        self.on_path[a] = true;
        let truncated = self.extend(b, cap, &mut stack, &mut out);
        self.on_path[a] = false;
        let truncated = truncated?;
        out.sort_by_key(|p| p.len());
        Ok((out, truncated))
    }

    fn extend(
        &mut self,
        b: VertexId,
        cap: usize,
        stack: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) -> Result<bool, OutOfBudget> {
        self.tick()?;
        let v = *stack.last().unwrap();
        for &(w, e) in self.g.incident(v) {
            if self.used[e] || self.on_path[w] {
                continue;
            }
            if w == b {
                let len = stack.len();
                if !self.flags.totally_odd || len % 2 == 1 {
                    let mut p = stack.clone();
                    p.push(b);
                    out.push(p);
                    if out.len() >= cap {
                        return Ok(true);
                    }
                }
                continue;
            }
            if self.flags.strong && self.is_terminal[w] {
                continue;
            }
            self.on_path[w] = true;
            stack.push(w);
            let stop = self.extend(b, cap, stack, out);
            stack.pop();
            self.on_path[w] = false;
            if stop? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn free_degree(&self, v: VertexId) -> usize {
        self.g.incident(v).iter().filter(|&&(_, e)| !self.used[e]).count()
    }

    fn edges_of(&self, p: &[VertexId]) -> Vec<EdgeId> {
        p.windows(2)
            .map(|s| {
                self.g
                    .incident(s[0])
                    .iter()
                    .find(|&&(w, e)| w == s[1] && !self.used[e])
                    .map(|&(_, e)| e)
                    .expect("path uses free edges")
            })
            .collect()
    }

    fn solve(
        &mut self,
        pending: &mut Vec<(VertexId, VertexId)>,
        chosen: &mut Vec<Vec<VertexId>>,
    ) -> Result<bool, OutOfBudget> {
        if pending.is_empty() {
            return Ok(true);
        }
        // each terminal needs a free edge per unrouted pair at it
        let mut need = std::collections::HashMap::new();
        for &(a, b) in pending.iter() {
            *need.entry(a).or_insert(0usize) += 1;
            *need.entry(b).or_insert(0usize) += 1;
        }
        if need.iter().any(|(&v, &k)| self.free_degree(v) < k) {
            return Ok(false);
        }
        let mut pick = 0;
        let mut fewest = usize::MAX;
        for (i, &(a, b)) in pending.iter().enumerate() {
            let (found, _) = self.paths(a, b, COUNT_CAP)?;
            if found.is_empty() {
                return Ok(false);
            }
            if found.len() < fewest {
                fewest = found.len();
                pick = i;
            }
        }
        let (a, b) = pending.swap_remove(pick);
        let (candidates, truncated) = self.paths(a, b, self.budget.max_paths_per_pair)?;
        if truncated {
            self.incomplete = true;
        }
        for p in candidates {
            let edges = self.edges_of(&p);
            for &e in &edges {
                self.used[e] = true;
            }
            chosen.push(p);
            let ok = self.solve(pending, chosen)?;
            if ok {
                return Ok(true);
            }
            chosen.pop();
            for &e in &edges {
                self.used[e] = false;
            }
        }
        pending.push((a, b));
        let last = pending.len() - 1;
        pending.swap(pick, last);
        Ok(false)
    }

    fn try_terminals(&mut self, terminals: &[VertexId]) -> Result<Option<Vec<Vec<VertexId>>>, OutOfBudget> {
        for &v in terminals {
            self.is_terminal[v] = true;
        }
        let mut pending: Vec<_> = terminals
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| terminals[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        let mut chosen = Vec::new();
        let res = self.solve(&mut pending, &mut chosen);
        for &v in terminals {
            self.is_terminal[v] = false;
        }
        self.used.iter_mut().for_each(|u| *u = false);
        Ok(res?.then_some(chosen))
    }
}

fn certificate(g: &Multigraph, terminals: &[VertexId], mut paths: Vec<Vec<VertexId>>, flags: SearchFlags) -> ImmersionCertificate {
    // orient from the earlier terminal and list in terminal-pair order
    let pos = |v: VertexId| terminals.iter().position(|&x| x == v).expect("terminal");
    for p in paths.iter_mut() {
        if pos(p[0]) > pos(*p.last().unwrap()) {
            p.reverse();
        }
    }
    paths.sort_by_key(|p| (pos(p[0]), pos(*p.last().unwrap())));
    let mut cert = ImmersionCertificate::new(
        g,
        terminals.to_vec(),
        paths.into_iter().map(PairPath::new).collect(),
        "oracle",
    );
    cert.properties.strong = flags.strong;
    cert.properties.totally_odd = flags.totally_odd;
    cert
}

/// Searches the given terminal set only.
pub fn find_immersion_with_terminals(
    g: &Multigraph,
    terminals: &[VertexId],
    flags: SearchFlags,
    budget: SearchBudget,
) -> SearchResult {
    let mut s = Searcher::new(g, flags, budget);
    let outcome = match s.try_terminals(terminals) {
        Ok(Some(paths)) => SearchOutcome::Found(Box::new(certificate(g, terminals, paths, flags))),
        Ok(None) if !s.incomplete => SearchOutcome::ExhaustedNo,
        _ => SearchOutcome::BudgetOut,
    };
    SearchResult {
        outcome,
        nodes: s.nodes,
    }
}

/// Backtracking over terminal `t`-subsets in lexicographic order. A vertex
/// needs degree at least `t - 1` to be a terminal.
pub fn find_immersion(g: &Multigraph, t: usize, flags: SearchFlags, budget: SearchBudget) -> SearchResult {
    let candidates: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) + 1 >= t)
        .collect();
    let mut s = Searcher::new(g, flags, budget);
    let mut subset: Vec<usize> = (0..t).collect();
    let k = candidates.len();
    if t > k {
        return SearchResult {
            outcome: SearchOutcome::ExhaustedNo,
            nodes: 0,
        };
    }
    loop {
        let terminals: Vec<VertexId> = subset.iter().map(|&i| candidates[i]).collect();
        match s.try_terminals(&terminals) {
            Err(OutOfBudget) => {
                return SearchResult {
                    outcome: SearchOutcome::BudgetOut,
                    nodes: s.nodes,
                }
            }
            Ok(Some(paths)) => {
                return SearchResult {
                    outcome: SearchOutcome::Found(Box::new(certificate(g, &terminals, paths, flags))),
                    nodes: s.nodes,
                }
            }
            Ok(None) => {}
        }
        // next combination
        let Some(i) = (0..t).rev().find(|&i| subset[i] != i + k - t) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..t {
            subset[j] = subset[j - 1] + 1;
        }
    }
    let outcome = if s.incomplete {
        SearchOutcome::BudgetOut
    } else {
        SearchOutcome::ExhaustedNo
    };
    SearchResult {
        outcome,
        nodes: s.nodes,
    }
}

/// Shortest simple odd `a`-`b` path avoiding `blocked_edges`, and avoiding
/// `blocked_vertices` as interior vertices. Iterative deepening over odd
/// lengths; `None` when no such path exists or the budget runs out.
pub fn shortest_odd_path(
    g: &Multigraph,
    a: VertexId,
    b: VertexId,
    blocked_edges: &[bool],
    blocked_vertices: &[bool],
    max_nodes: u64,
) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut nodes = 0u64;
    let mut on_path = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &Multigraph,
        b: VertexId,
        remaining: usize,
        stack: &mut Vec<VertexId>,
        on_path: &mut [bool],
        blocked_edges: &[bool],
        blocked_vertices: &[bool],
        nodes: &mut u64,
        max_nodes: u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > max_nodes {
            return None;
        }
        let v = *stack.last().unwrap();
        for &(w, e) in g.incident(v) {
            if blocked_edges[e] || on_path[w] {
                continue;
            }
            if w == b {
                if remaining == 1 {
                    stack.push(b);
                    return Some(true);
                }
                continue;
            }
            if remaining == 1 || blocked_vertices[w] {
                continue;
            }
            on_path[w] = true;
            stack.push(w);
            match dfs(g, b, remaining - 1, stack, on_path, blocked_edges, blocked_vertices, nodes, max_nodes) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            stack.pop();
            on_path[w] = false;
        }
        Some(false)
    }
    let mut len = 1;
    while len < n.max(2) {
        let mut stack = vec![a];
        on_path.iter_mut().for_each(|x| *x = false);
        on_path[a] = true;
        match dfs(g, b, len, &mut stack, &mut on_path, blocked_edges, blocked_vertices, &mut nodes, max_nodes) {
            Some(true) => return Some(stack),
            None => return None,
            Some(false) => {}
        }
        len += 2;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, flower, FlowerParams};
    use crate::verify::{verify, VerifyFlags};

    fn run(g: &Multigraph, t: usize) -> SearchResult {
        find_immersion(g, t, SearchFlags::STRONG_ODD, SearchBudget::default())
    }

    #[test]
    fn clique_of_single_edges() {
        let k4 = complete(4);
        let r = run(&k4, 4);
        let cert = r.outcome.certificate().expect("found");
        assert!(cert.paths.iter().all(|p| p.length() == 1));
        assert!(verify(&k4, cert, VerifyFlags::full(4)).unwrap().passed());
    }

    #[test]
    fn bipartite_excludes_triangle() {
        assert_eq!(run(&cycle(4), 3).outcome, SearchOutcome::ExhaustedNo);
        let weak = SearchFlags { strong: false, totally_odd: true };
        let r = find_immersion(&crate::graph::generators::complete_bipartite(3, 3), 3, weak, SearchBudget::default());
        assert_eq!(r.outcome, SearchOutcome::ExhaustedNo);
    }

    #[test]
    fn five_cycle_triangle() {
        let c5 = cycle(5);
        let cert = run(&c5, 3).outcome.certificate().cloned().expect("found");
        let mut lens: Vec<_> = cert.paths.iter().map(|p| p.length()).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 1, 3]);
        assert!(verify(&c5, &cert, VerifyFlags::full(3)).unwrap().passed());
    }

    #[test]
    fn flower_terminals() {
        let f = flower(3, FlowerParams::default());
        let r = find_immersion_with_terminals(&f.graph, &f.terminals, SearchFlags::STRONG_ODD, SearchBudget::default());
        let cert = r.outcome.certificate().expect("found");
        assert!(verify(&f.graph, cert, VerifyFlags::full(3)).unwrap().passed());
        let skeleton = flower(3, FlowerParams { parity_fix: false, padding: 0 });
        let r = find_immersion_with_terminals(&skeleton.graph, &skeleton.terminals, SearchFlags::STRONG_ODD, SearchBudget::default());
        assert_eq!(r.outcome, SearchOutcome::ExhaustedNo);
    }

    #[test]
    fn tiny_budget_is_budget_out() {
        let tiny = SearchBudget { max_nodes: 3, ..SearchBudget::default() };
        assert_eq!(find_immersion(&complete(5), 5, SearchFlags::STRONG_ODD, tiny).outcome, SearchOutcome::BudgetOut);
    }

    #[test]
    fn trivial_orders() {
        assert!(run(&cycle(4), 0).outcome.certificate().is_some());
        assert!(run(&cycle(4), 2).outcome.certificate().is_some());
        assert_eq!(run(&cycle(4), 5).outcome, SearchOutcome::ExhaustedNo);
    }

    #[test]
    fn odd_detour() {
        let c5 = cycle(5);
        let none = vec![false; 5];
        let mut blocked = vec![false; 5];
        blocked[0] = true; // edge 0-1
        // the remaining 0-1 path has even length
        assert_eq!(shortest_odd_path(&c5, 0, 1, &blocked, &none, 1000), None);
        assert_eq!(shortest_odd_path(&c5, 0, 1, &none, &none, 1000).unwrap(), vec![0, 1]);
        assert_eq!(shortest_odd_path(&c5, 0, 2, &none, &none, 1000).unwrap(), vec![0, 4, 3, 2]);
        let mut inner = vec![false; 5];
        inner[4] = true;
        assert_eq!(shortest_odd_path(&c5, 0, 2, &none, &inner, 1000), None);
        assert_eq!(shortest_odd_path(&cycle(4), 0, 2, &none, &none, 1000), None);
    }
}
