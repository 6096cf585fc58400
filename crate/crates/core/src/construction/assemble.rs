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

//! Case analysis on the parity pattern of a lifted path system.
//!
//! Positions below are 1-based to match the usual labeling: `end(i)` is the
//! last vertex of the i-th lifted path, all such ends are host edges at `y`
//! and therefore pairwise adjacent. Hub paths run from the first vertex of
//! each lifted path to the extra terminal `v*`.

use super::{third_neighbor, Attachment, ConstructionError, LiftedSystem};
use crate::certificate::{ImmersionCertificate, PairPath};
use crate::graph::{LineGraphMap, Multigraph, VertexId};

struct Plan<'a> {
    lifted: &'a LiftedSystem,
    order: Vec<usize>,
    case: &'static str,
}

impl Plan<'_> {
    fn q(&self, i: usize) -> &[VertexId] {
        &self.lifted.q[self.order[i - 1]]
    }

    fn end(&self, i: usize) -> VertexId {
        *self.q(i).last().expect("nonempty")
    }

    fn host_path(&self, i: usize) -> &[VertexId] {
        &self.lifted.host_paths[self.order[i - 1]]
    }

    /// `Q_i` followed by the ends of the listed paths.
    fn hub(&self, i: usize, via: &[usize]) -> Vec<VertexId> {
        let mut p = self.q(i).to_vec();
        p.extend(via.iter().map(|&k| self.end(k)));
        p
    }

    fn fail(&self, detail: impl Into<String>) -> ConstructionError {
        ConstructionError::InvariantViolation {
            case: self.case.into(),
            detail: detail.into(),
        }
    }
}

/// Lowest-id host edge at `vertex` outside the given host paths.
fn free_edge_at(h: &Multigraph, map: &LineGraphMap, vertex: VertexId, avoid: &[&[VertexId]]) -> Option<VertexId> {
    let used: Vec<usize> = avoid
        .iter()
        .flat_map(|p| p.windows(2))
        .filter_map(|w| h.edge_between(w[0], w[1]))
        .collect();
    h.incident(vertex)
        .iter()
        .map(|&(_, e)| e)
        .filter(|e| !used.contains(e))
        .min()
        .map(|e| map.vertex_of(e))
}

/// `v_0, b, v_1, ..., v_l` for an edge `b` at the first internal vertex.
fn splice_first(q: &[VertexId], b: VertexId) -> Vec<VertexId> {
    Attachment::AtH1.insert(q, b)
}

/// Builds the clique immersion of order `d + 1` in `map.line_graph` from a
/// lifted system of an edge-critical host with maximum degree `d >= 3`.
pub fn assemble(lifted: &LiftedSystem, h: &Multigraph, map: &LineGraphMap) -> Result<ImmersionCertificate, ConstructionError> {
    let d = lifted.d();
    if d < 3 {
        return Err(ConstructionError::InvariantViolation {
            case: "dispatch".into(),
            detail: format!("needs at least 3 paths, got {d}"),
        });
    }
    let odd: Vec<usize> = (0..d).filter(|&i| lifted.len(i) % 2 == 1).collect();
    let even: Vec<usize> = (0..d).filter(|&i| lifted.len(i).is_multiple_of(2) && lifted.len(i) > 0).collect();
    let degenerate: Vec<usize> = lifted.degenerate.into_iter().collect();
    let j = odd.len();
    let deg_h1 = |i: usize| h.degree(lifted.host_paths[i][1]);
    let concat = |parts: &[&[usize]]| parts.concat();

    // (hub paths indexed 1..=d, index of v* among path ends)
    let (plan, hubs, star_at): (Plan, Vec<Vec<VertexId>>, usize) = match j {
        _ if j >= 4 => {
            let plan = Plan { lifted, order: concat(&[&odd, &even, &degenerate]), case: "j>=4" };
            let mut hubs = vec![plan.hub(1, &[])];
            for i in 2..=d {
                hubs.push(match i {
                    _ if i < j => plan.hub(i, &[i + 1, 1]),
                    _ if i == j => plan.hub(i, &[2, 1]),
                    _ => plan.hub(i, &[1]),
                });
            }
            (plan, hubs, 1)
        }
        3 if !even.is_empty() => {
            let plan = Plan { lifted, order: concat(&[&odd, &even, &degenerate]), case: "j=3,l4>=2" };
            let (a, at) = third_neighbor(h, map, lifted, plan.order[3])?;
            let mut hubs = vec![plan.hub(1, &[2, 4]), plan.hub(2, &[3, 4]), plan.hub(3, &[1, 4]), at.insert(plan.q(4), a)];
            hubs.extend((5..=d).map(|i| plan.hub(i, &[4])));
            (plan, hubs, 4)
        }
        3 if d == 4 => {
            let mut o = odd.clone();
            let pick = o.iter().position(|&i| deg_h1(i) >= 3).ok_or_else(|| ConstructionError::InvariantViolation {
                case: "j=3,l4=0".into(),
                detail: "no odd path starts at a vertex of degree 3 or more".into(),
            })?;
            let chosen = o.remove(pick);
            o.push(chosen);
            let plan = Plan { lifted, order: concat(&[&o, &degenerate]), case: "j=3,l4=0" };
            let h1 = plan.host_path(3)[1];
            let a = free_edge_at(h, map, h1, &[plan.host_path(3)])
                .ok_or_else(|| plan.fail("no edge outside the third path at its first internal vertex"))?;
            let mut q3 = splice_first(plan.q(3), a);
            q3.extend([plan.end(4), plan.end(2), plan.end(1)]);
            let hubs = vec![plan.hub(1, &[]), plan.hub(2, &[3, 1]), q3, plan.hub(4, &[1])];
            (plan, hubs, 1)
        }
        3 if d == 3 => {
            let (wide, narrow): (Vec<usize>, Vec<usize>) = odd.iter().partition(|&&i| deg_h1(i) == 3);
            if wide.len() < 2 {
                return Err(ConstructionError::InvariantViolation {
                    case: "j=3,d=3".into(),
                    detail: "fewer than two first internal vertices of degree 3".into(),
                });
            }
            // two degree-3 starts go to positions 2 and 3
            let order = [&narrow[..], &wide[..]].concat();
            let plan = Plan { lifted, order, case: "j=3,d=3" };
            let all = [plan.host_path(1), plan.host_path(2), plan.host_path(3)];
            let mut hubs = vec![plan.hub(1, &[])];
            for i in [2, 3] {
                let b = free_edge_at(h, map, plan.host_path(i)[1], &all)
                    .ok_or_else(|| plan.fail(format!("no edge outside the three paths at the start of path {i}")))?;
                let mut p = splice_first(plan.q(i), b);
                p.push(plan.end(1));
                hubs.push(p);
            }
            (plan, hubs, 1)
        }
        3 => {
            return Err(ConstructionError::InvariantViolation {
                case: "j=3".into(),
                detail: format!("no even path of length 2 or more with d = {d}"),
            })
        }
        0 => {
            let plan = Plan { lifted, order: concat(&[&even, &degenerate]), case: "j=0" };
            let (a, at) = third_neighbor(h, map, lifted, plan.order[0])?;
            let mut hubs = vec![at.insert(plan.q(1), a)];
            hubs.extend((2..=d).map(|i| plan.hub(i, &[1])));
            (plan, hubs, 1)
        }
        1 => {
            let plan = Plan { lifted, order: concat(&[&odd, &even, &degenerate]), case: "j=1" };
            let mut hubs = vec![plan.hub(1, &[])];
            hubs.extend((2..=d).map(|i| plan.hub(i, &[1])));
            (plan, hubs, 1)
        }
        _ if d >= 4 => {
            // a direct x-y edge at position 3 or 4 is passed through by a
            // hub path; only d >= 5 leaves room to avoid that
            let order = concat(&[&odd, &even, &degenerate]);
            let plan = Plan { lifted, order, case: "j=2,d>=4" };
            let mut hubs = vec![plan.hub(1, &[]), plan.hub(2, &[3, 1]), plan.hub(3, &[4, 2, 1])];
            hubs.extend((4..=d).map(|i| plan.hub(i, &[1])));
            (plan, hubs, 1)
        }
        _ => {
            let mut o = odd.clone();
            if deg_h1(o[1]) != 3 {
                o.swap(0, 1);
            }
            let plan = Plan { lifted, order: concat(&[&o, &even, &degenerate]), case: "j=2,d=3" };
            if deg_h1(plan.order[1]) != 3 {
                return Err(plan.fail("neither odd path starts at a vertex of degree 3"));
            }
            let all = [plan.host_path(1), plan.host_path(2), plan.host_path(3)];
            let b = free_edge_at(h, map, plan.host_path(2)[1], &all)
                .ok_or_else(|| plan.fail("no edge outside the paths at the start of path 2"))?;
            let mut q2 = splice_first(plan.q(2), b);
            q2.push(plan.end(1));
            let hubs = vec![plan.hub(1, &[]), q2, plan.hub(3, &[1])];
            (plan, hubs, 1)
        }
    };

    let v_star = plan.end(star_at);
    let g = &map.line_graph;
    for (i, p) in hubs.iter().enumerate() {
        let i = i + 1;
        if p.first() != Some(&plan.q(i)[0]) || p.last() != Some(&v_star) {
            return Err(plan.fail(format!("hub path {i} has wrong endpoints")));
        }
        if p.len() % 2 != 0 {
            return Err(plan.fail(format!("hub path {i} has even length {}", p.len() - 1)));
        }
        if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(plan.fail(format!("hub path {i} steps {}-{}, not adjacent", w[0], w[1])));
        }
    }
    let mut terminals: Vec<VertexId> = (1..=d).map(|i| plan.q(i)[0]).collect();
    if terminals.contains(&v_star) {
        return Err(plan.fail("v* coincides with a first vertex"));
    }
    terminals.push(v_star);
    let mut paths = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            paths.push(PairPath::new(vec![terminals[a], terminals[b]]));
        }
        paths.push(PairPath::new(hubs[a].clone()));
    }
    // pair order: (a, b) lexicographic over terminal positions
    let pos = |v: VertexId| terminals.iter().position(|&t| t == v).expect("terminal");
    paths.sort_by_key(|p| (pos(p.pair[0]), pos(p.pair[1])));
    Ok(ImmersionCertificate::new(g, terminals, paths, plan.case))
}
