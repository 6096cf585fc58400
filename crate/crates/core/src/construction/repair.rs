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

use std::collections::BTreeSet;

use super::ConstructionError;
use crate::certificate::{ImmersionCertificate, PairPath};
use crate::graph::{Multigraph, VertexId};
use crate::oracle::{find_immersion_with_terminals, shortest_odd_path, SearchBudget, SearchFlags, SearchOutcome};
use crate::verify::{verify, VerificationReport, VerifyFlags, Witness};

/// Paths named by witnesses; `None` when the failure is structural.
fn offending_paths(report: &VerificationReport) -> Option<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for w in report.witnesses() {
        let path = match *w {
            Witness::EmptyPath { path }
            | Witness::PairNotTerminals { path }
            | Witness::WrongEndpoints { path }
            | Witness::VertexOutOfRange { path, .. }
            | Witness::NotAnEdge { path, .. }
            | Witness::RepeatedVertex { path, .. }
            | Witness::InteriorTerminal { path, .. }
            | Witness::EvenPath { path, .. } => path,
            Witness::EdgeReused { second, .. } => second,
            _ => return None,
        };
        out.insert(path);
    }
    Some(out)
}

fn edge_ids(g: &Multigraph, p: &[VertexId]) -> Vec<usize> {
    p.windows(2).filter_map(|w| g.edge_between(w[0], w[1])).collect()
}

/// Reroutes the paths a verification report blames, each by a shortest odd
/// path that avoids the other paths' edges and passes no terminal. If that
/// fails the oracle is run on the same terminal set. A certificate that
/// already passes comes back unchanged.
pub fn repair(
    g: &Multigraph,
    mut cert: ImmersionCertificate,
    report: &VerificationReport,
    budget: SearchBudget,
) -> Result<ImmersionCertificate, ConstructionError> {
    if report.passed() {
        return Ok(cert);
    }
    let case = cert.provenance.case.clone();
    let full = VerifyFlags::full(cert.t);
    if let Some(bad) = offending_paths(report).filter(|b| !b.is_empty()) {
        let mut used = vec![false; g.edge_count()];
        for (i, p) in cert.paths.iter().enumerate() {
            if !bad.contains(&i) {
                for e in edge_ids(g, &p.vertices) {
                    used[e] = true;
                }
            }
        }
        let mut blocked = vec![false; g.vertex_count()];
        for &t in &cert.terminals {
            if t < blocked.len() {
                blocked[t] = true;
            }
        }
        let mut rerouted = Vec::new();
        for &i in &bad {
            let [a, b] = cert.paths[i].pair;
            if a >= g.vertex_count() || b >= g.vertex_count() {
                rerouted.clear();
                break;
            }
            match shortest_odd_path(g, a, b, &used, &blocked, budget.max_nodes) {
                Some(p) => {
                    for e in edge_ids(g, &p) {
                        used[e] = true;
                    }
                    rerouted.push((i, p));
                }
                None => {
                    rerouted.clear();
                    break;
                }
            }
        }
        if !rerouted.is_empty() {
            let mut candidate = cert.clone();
            for (i, p) in &rerouted {
                candidate.paths[*i] = PairPath::new(p.clone());
            }
            candidate.properties.strong = true;
            candidate.properties.totally_odd = true;
            if verify(g, &candidate, full).map(|r| r.passed()).unwrap_or(false) {
                let list: Vec<String> = rerouted.iter().map(|(i, _)| i.to_string()).collect();
                let event = format!("repair[{case}]: rerouted path {}", list.join(", "));
                log::info!("{event}");
                candidate.provenance.events.push(event);
                return Ok(candidate);
            }
        }
    }
    let result = find_immersion_with_terminals(g, &cert.terminals, SearchFlags::STRONG_ODD, budget);
    match result.outcome {
        SearchOutcome::Found(found) => {
            let event = format!("repair[{case}]: oracle rerouted all paths on the same terminals");
            log::info!("{event}");
            cert.paths = found.paths;
            cert.properties.strong = true;
            cert.properties.totally_odd = true;
            cert.provenance.events.push(event);
            Ok(cert)
        }
        other => {
            let budget_exhausted = other == SearchOutcome::BudgetOut;
            let why = if budget_exhausted { "budget exhausted" } else { "no immersion on these terminals" };
            let witnesses: Vec<String> = report.witnesses().map(|w| w.to_string()).collect();
            Err(ConstructionError::Unrepairable {
                case,
                diagnostic: format!("{why} after {} nodes; {}", result.nodes, witnesses.join("; ")),
                budget_exhausted,
            })
        }
    }
}
