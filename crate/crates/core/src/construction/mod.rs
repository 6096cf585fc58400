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

//! End-to-end construction of a totally odd strong clique immersion of
//! order `χ(L(H))` in a line graph `L(H)`.
//!
//! Class-1 hosts and odd cycles are handled directly. Otherwise the host is
//! reduced to an edge-critical subgraph, its edge-disjoint path system is
//! lifted into the line graph and the immersion is assembled according to
//! the parity pattern of the lifted paths. Every result is re-verified; a
//! failed check is logged as an event and handed to [`repair`].

mod assemble;
mod lifted;
mod repair;

pub use assemble::assemble;
pub use lifted::{lift_paths, third_neighbor, Attachment, LiftedSystem};
pub use repair::repair;

use thiserror::Error;

use crate::certificate::{ImmersionCertificate, PairPath};
use crate::coloring::{chromatic_index, critical_subgraph, ColoringError, NodeBudget};
use crate::graph::{line_graph, Multigraph, VertexId};
use crate::oracle::SearchBudget;
use crate::paths::{thomassen_system, PathError};
use crate::verify::{verify, VerifyFlags};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("construction requires a simple host graph")]
    NotSimple,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Paths(#[from] PathError),
    /// No extra edge next to the start of a path of length at least two;
    /// the input was not edge-critical.
    #[error("claim violated: no edge outside path {path} at its first two internal vertices")]
    ClaimViolated { path: usize },
    #[error("invariant violated in case {case}: {detail}")]
    InvariantViolation { case: String, detail: String },
    #[error("unrepairable at budget (case {case}): {diagnostic}")]
    Unrepairable {
        case: String,
        diagnostic: String,
        /// True when the oracle fallback ran out of budget rather than
        /// proving the terminal set infeasible.
        budget_exhausted: bool,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConstructOptions {
    pub coloring: NodeBudget,
    pub repair: SearchBudget,
}

pub fn construct_immersion(h: &Multigraph) -> Result<ImmersionCertificate, ConstructionError> {
    construct_immersion_with(h, ConstructOptions::default())
}

/// Certificate on `L(h)` claiming a totally odd strong immersion of
/// `K_χ(L(h))`, verified before it is returned.
pub fn construct_immersion_with(
    h: &Multigraph,
    opts: ConstructOptions,
) -> Result<ImmersionCertificate, ConstructionError> {
    if !h.is_simple() {
        return Err(ConstructionError::NotSimple);
    }
    let lg = line_graph(h).line_graph;
    let d = h.max_degree();
    let (k, _) = chromatic_index(h, opts.coloring)?;
    let cert = if k == d {
        star_certificate(h, &lg)
    } else if d <= 2 {
        odd_cycle_certificate(h, &lg)?
    } else {
        let sub = critical_subgraph(h, opts.coloring)?;
        let system = thomassen_system(&sub.graph, d, opts.coloring)?;
        let sub_map = line_graph(&sub.graph);
        let lifted = lift_paths(&sub.graph, &system, &sub_map);
        let local = assemble(&lifted, &sub.graph, &sub_map)?;
        // L(H') sits inside L(H) with the same ids as host edges
        local.embed(&lg, |v| sub.parent_edge[v])
    };
    finish(&lg, cert, opts.repair)
}

fn finish(
    lg: &Multigraph,
    mut cert: ImmersionCertificate,
    budget: SearchBudget,
) -> Result<ImmersionCertificate, ConstructionError> {
    let report = verify(lg, &cert, VerifyFlags::full(cert.t)).expect("host is the line graph");
    if report.passed() {
        return Ok(cert);
    }
    let case = cert.provenance.case.clone();
    for w in report.witnesses() {
        let event = format!("verify[{case}]: {w}");
        log::warn!("{event}");
        cert.provenance.events.push(event);
    }
    cert.properties.strong = false;
    cert.provenance.events.push(format!("verify[{case}]: strongness downgraded"));
    repair(lg, cert, &report, budget)
}

/// The edges at a maximum-degree vertex, pairwise joined by single edges.
fn star_certificate(h: &Multigraph, lg: &Multigraph) -> ImmersionCertificate {
    let v = (0..h.vertex_count()).find(|&v| h.degree(v) == h.max_degree());
    let terminals: Vec<VertexId> = v.map_or_else(Vec::new, |v| h.incident(v).iter().map(|&(_, e)| e).collect());
    let mut paths = Vec::new();
    for (i, &a) in terminals.iter().enumerate() {
        for &b in &terminals[i + 1..] {
            paths.push(PairPath::new(vec![a, b]));
        }
    }
    ImmersionCertificate::new(lg, terminals, paths, "star")
}

/// Three consecutive edges of an odd cycle component, seen in `L(h)`.
fn odd_cycle_certificate(h: &Multigraph, lg: &Multigraph) -> Result<ImmersionCertificate, ConstructionError> {
    let mut seen = vec![false; h.vertex_count()];
    for start in 0..h.vertex_count() {
        if seen[start] || h.degree(start) != 2 {
            continue;
        }
        // walk until returning to start or hitting a path end
        let mut cycle = Vec::new();
        let mut prev_edge = usize::MAX;
        let mut v = start;
        let closed = loop {
            seen[v] = true;
            let Some(&(w, e)) = h.incident(v).iter().find(|&&(_, e)| e != prev_edge) else {
                break false;
            };
            if h.degree(v) != 2 {
                break false;
            }
            cycle.push(e);
            prev_edge = e;
            v = w;
            if v == start {
                break true;
            }
        };
        if closed && cycle.len() % 2 == 1 {
            let (e0, e1, e2) = (cycle[0], cycle[1], cycle[2]);
            let mut around = vec![e0];
            around.extend(cycle[2..].iter().rev());
            let paths = vec![
                PairPath::new(vec![e0, e1]),
                PairPath::new(around),
                PairPath::new(vec![e1, e2]),
            ];
            return Ok(ImmersionCertificate::new(lg, vec![e0, e1, e2], paths, "odd-cycle"));
        }
    }
    Err(ConstructionError::InvariantViolation {
        case: "odd-cycle".into(),
        detail: "class-2 host of maximum degree 2 without an odd cycle".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, petersen, petersen_minus_vertex, star};

    fn check(h: &Multigraph, t: usize) -> ImmersionCertificate {
        let cert = construct_immersion(h).unwrap();
        assert_eq!(cert.t, t);
        let lg = line_graph(h).line_graph;
        assert!(verify(&lg, &cert, VerifyFlags::full(t)).unwrap().passed());
        cert
    }

    #[test]
    fn five_cycle() {
        let cert = check(&cycle(5), 3);
        assert_eq!(cert.provenance.case, "odd-cycle");
        let lens: Vec<_> = cert.paths.iter().map(|p| p.length()).collect();
        assert_eq!(lens, vec![1, 3, 1]);
    }

    #[test]
    fn triangle_and_star() {
        assert_eq!(check(&cycle(3), 3).provenance.case, "odd-cycle");
        let cert = check(&star(5), 5);
        assert_eq!(cert.provenance.case, "star");
        assert!(cert.paths.iter().all(|p| p.length() == 1));
        // the empty graph has an empty line graph
        assert_eq!(check(&Multigraph::new(3), 0).paths.len(), 0);
    }

    #[test]
    fn critical_pipelines() {
        check(&petersen_minus_vertex(), 4);
        check(&petersen(), 4);
        check(&complete(5), 5);
    }

    #[test]
    fn multigraph_rejected() {
        let mut h = cycle(3);
        h.add_edge(0, 1).unwrap();
        assert_eq!(construct_immersion(&h), Err(ConstructionError::NotSimple));
    }
}
