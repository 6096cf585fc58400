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

use std::fmt;

use serde::Serialize;

use super::{find_immersion, SearchBudget, SearchFlags, SearchOutcome};
use crate::coloring::{chromatic_number, NodeBudget};
use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanOutcome {
    Found,
    ExhaustedNo,
    BudgetOut,
}

impl fmt::Display for ScanOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanOutcome::Found => "found",
            ScanOutcome::ExhaustedNo => "exhausted-no",
            ScanOutcome::BudgetOut => "budget-out",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub index: usize,
    /// Canonical graph6 form, or the input order when not simple.
    pub canonical: String,
    pub n: usize,
    pub m: usize,
    /// `None` when the chromatic number ran out of budget.
    pub chi: Option<usize>,
    pub outcome: ScanOutcome,
    pub nodes: u64,
    pub millis: u128,
}

impl fmt::Display for LedgerEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chi = self.chi.map_or_else(|| "?".to_string(), |c| c.to_string());
        write!(
            f,
            "graph {} {} n={} m={} chi={} outcome={} nodes={} ms={}",
            self.index, self.canonical, self.n, self.m, chi, self.outcome, self.nodes, self.millis
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanLedger {
    pub entries: Vec<LedgerEntry>,
    /// Index of the first graph with no immersion; entries stop there.
    pub counterexample: Option<usize>,
}

impl ScanLedger {
    pub fn count(&self, outcome: ScanOutcome) -> usize {
        self.entries.iter().filter(|e| e.outcome == outcome).count()
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.entries.iter().map(|e| format!("{e}\n")).collect();
        out.push_str(&format!(
            "summary graphs={} found={} exhausted-no={} budget-out={}\n",
            self.entries.len(),
            self.count(ScanOutcome::Found),
            self.count(ScanOutcome::ExhaustedNo),
            self.count(ScanOutcome::BudgetOut)
        ));
        out
    }
}

fn scan_one(index: usize, g: &Multigraph, flags: SearchFlags, budget: SearchBudget) -> LedgerEntry {
    let start = std::time::Instant::now();
    let canonical = if g.is_simple() {
        super::canon::canonical_form(g).unwrap_or_default()
    } else {
        crate::graph::io::serialize_graph(g).lines().skip(1).collect::<Vec<_>>().join(",")
    };
    let chi = chromatic_number(g, NodeBudget { max_nodes: budget.max_nodes })
        .ok()
        .map(|(k, _)| k);
    let (outcome, nodes) = match chi {
        None => (ScanOutcome::BudgetOut, 0),
        Some(k) => {
            let r = find_immersion(g, k, flags, budget);
            let o = match r.outcome {
                SearchOutcome::Found(_) => ScanOutcome::Found,
                SearchOutcome::ExhaustedNo => ScanOutcome::ExhaustedNo,
                SearchOutcome::BudgetOut => ScanOutcome::BudgetOut,
            };
            (o, r.nodes)
        }
    };
    LedgerEntry {
        index,
        canonical,
        n: g.vertex_count(),
        m: g.edge_count(),
        chi,
        outcome,
        nodes,
        millis: start.elapsed().as_millis(),
    }
}

/// Runs the oracle with `t = χ(g)` on every graph. Work is spread over
/// `workers` threads when the `parallel` feature is on; the ledger order is
/// the input order either way. An exhausted-no result is a counterexample:
/// it is logged as an error and the ledger is cut after it.
pub fn scan_conjecture(graphs: &[Multigraph], flags: SearchFlags, budget: SearchBudget, workers: usize) -> ScanLedger {
    let mut entries = run_all(graphs, flags, budget, workers);
    let counterexample = entries.iter().position(|e| e.outcome == ScanOutcome::ExhaustedNo);
    if let Some(i) = counterexample {
        log::error!("counterexample found: {}", entries[i]);
        entries.truncate(i + 1);
    }
    ScanLedger {
        entries,
        counterexample,
    }
}

#[cfg(feature = "parallel")]
fn run_all(graphs: &[Multigraph], flags: SearchFlags, budget: SearchBudget, workers: usize) -> Vec<LedgerEntry> {
    use rayon::prelude::*;
    let work = || {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| scan_one(i, g, flags, budget))
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all(graphs: &[Multigraph], flags: SearchFlags, budget: SearchBudget, _workers: usize) -> Vec<LedgerEntry> {
    graphs
        .iter()
        .enumerate()
        .map(|(i, g)| scan_one(i, g, flags, budget))
        .collect()
}
