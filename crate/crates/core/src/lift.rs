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

//! Lifting clique immersions from `L(H)` to `L(mH)`.
//!
//! Every vertex of `L(H)` becomes `m` pairwise adjacent copies in `L(mH)`,
//! and adjacent vertices have all copies adjacent, so `L(mH)` contains the
//! blow-up of `L(H)`. A path of length `l` then carries `m^2` edge-disjoint
//! copies joining every copy of one end to every copy of the other. The
//! copy index at step `t` is `α_t·i + β_t·j mod m` for source copy `i` and
//! target copy `j`; consecutive coefficient rows have determinant ±1, so
//! each step is a bijection on copy pairs for every `m`.

use serde::Serialize;
use thiserror::Error;

use crate::certificate::{ImmersionCertificate, PairPath};
use crate::coloring::{chromatic_number, greedy_color_count, ColoringError, NodeBudget};
use crate::graph::{line_graph, multiply_edges, GraphError, Multigraph, VertexId};
use crate::verify::{verify, VerifyFlags};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("certificate host is not the line graph of the given graph")]
    HostMismatch,
    #[error("certificate does not verify as a totally odd immersion: {0}")]
    Unverified(String),
    #[error("host must be simple")]
    NotSimple,
}

/// Copy sequences for all `m^2` source/target copy pairs of one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupRouting {
    pub m: usize,
    pub len: usize,
    /// `assignment[i * m + j]` holds `k_0..=k_len` with `k_0 = i`, `k_len = j`.
    pub assignment: Vec<Vec<usize>>,
}

impl BlowupRouting {
    pub fn sequence(&self, i: usize, j: usize) -> &[usize] {
        &self.assignment[i * self.m + j]
    }

    /// Whether step `t` sends distinct copy pairs to distinct copy pairs.
    pub fn transition_is_bijective(&self, t: usize) -> bool {
        let mut seen = vec![false; self.m * self.m];
        self.assignment.iter().all(|k| !std::mem::replace(&mut seen[k[t] * self.m + k[t + 1]], true))
    }
}

fn row(t: usize, len: usize) -> (usize, usize) {
    match t {
        0 => (1, 0),
        _ if t == len => (0, 1),
        _ => (1, t % 2),
    }
}

/// # Panics
///
/// When `m == 0` or `len == 0`.
pub fn route(m: usize, len: usize) -> BlowupRouting {
    assert!(m >= 1 && len >= 1, "route needs m >= 1 and len >= 1");
    let assignment = (0..m * m)
        .map(|p| {
            let (i, j) = (p / m, p % m);
            (0..=len)
                .map(|t| {
                    let (a, b) = row(t, len);
                    (a * i + b * j) % m
                })
                .collect()
        })
        .collect();
    BlowupRouting { m, len, assignment }
}

/// The `m` copies in `L(mH)` of each terminal, in terminal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyTerminalSet {
    pub m: usize,
    pub copies: Vec<Vec<VertexId>>,
}

impl CopyTerminalSet {
    pub fn new(terminals: &[VertexId], m: usize) -> Self {
        CopyTerminalSet {
            m,
            copies: terminals.iter().map(|&v| (0..m).map(|k| m * v + k).collect()).collect(),
        }
    }

    pub fn flatten(&self) -> Vec<VertexId> {
        self.copies.concat()
    }
}

/// Lifts a verified totally odd certificate on `L(h)` to one of order
/// `m·t` on `L(mh)`. Cross-terminal pairs are routed copies of the
/// original paths; two copies of one terminal are joined by their edge.
/// Strongness carries over because interior copies are never terminals.
pub fn lift_certificate(cert: &ImmersionCertificate, h: &Multigraph, m: usize) -> Result<ImmersionCertificate, LiftError> {
    if !h.is_simple() {
        return Err(LiftError::NotSimple);
    }
    let lg = line_graph(h).line_graph;
    if !cert.host.matches(&lg) {
        return Err(LiftError::HostMismatch);
    }
    let flags = VerifyFlags {
        immersion: true,
        strong: cert.properties.strong,
        totally_odd: true,
        clique_order: Some(cert.t),
    };
    let report = verify(&lg, cert, flags).map_err(|_| LiftError::HostMismatch)?;
    if !report.passed() {
        let w: Vec<String> = report.witnesses().map(|w| w.to_string()).collect();
        return Err(LiftError::Unverified(w.join("; ")));
    }
    let blown = line_graph(&multiply_edges(h, m)?).line_graph;
    if m == 1 {
        return Ok(cert.clone());
    }
    let s = CopyTerminalSet::new(&cert.terminals, m);
    let t = cert.terminals.len();
    let mut paths = Vec::with_capacity(m * t * (m * t - 1) / 2);
    for a in 0..t {
        for b in a..t {
            if a == b {
                for c in 0..m {
                    for c2 in c + 1..m {
                        paths.push(PairPath::new(vec![s.copies[a][c], s.copies[a][c2]]));
                    }
                }
                continue;
            }
            let original = cert
                .path_between(cert.terminals[a], cert.terminals[b])
                .ok_or(LiftError::Unverified("missing pair".into()))?;
            let r = route(m, original.len() - 1);
            for i in 0..m {
                for j in 0..m {
                    let k = r.sequence(i, j);
                    paths.push(PairPath::new(original.iter().zip(k).map(|(&u, &c)| m * u + c).collect()));
                }
            }
        }
    }
    let routed = m * m * t * t.saturating_sub(1) / 2;
    let intra = t * m * (m - 1) / 2;
    debug_assert_eq!(paths.len(), routed + intra);
    let mut out = ImmersionCertificate::new(&blown, s.flatten(), paths, format!("blowup(m={m})"));
    out.properties = cert.properties;
    out.provenance.events = cert.provenance.events.clone();
    out.provenance.events.push(format!("lifted from K_{} certificate, case {}", cert.t, cert.provenance.case));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiBoundReport {
    pub m: usize,
    /// `χ(L(H))`
    pub chi_line: usize,
    /// `χ(L(mH))` when the exact search finished.
    pub chi_multiplied: Option<usize>,
    /// Exact value, or the greedy upper bound when the search ran out.
    pub upper: usize,
    /// `m·χ(L(H))`
    pub bound: usize,
    pub holds: bool,
}

impl ChiBoundReport {
    /// True when the comparison used the greedy bound only.
    pub fn weak_evidence(&self) -> bool {
        self.chi_multiplied.is_none()
    }
}

/// Compares `χ(L(mh))` with `m·χ(L(h))`.
pub fn chi_bound_check(h: &Multigraph, m: usize, budget: NodeBudget) -> Result<ChiBoundReport, LiftError> {
    let lg = line_graph(h).line_graph;
    let blown = line_graph(&multiply_edges(h, m)?).line_graph;
    let (chi_line, _) = chromatic_number(&lg, budget).map_err(|e| LiftError::Unverified(e.to_string()))?;
    let chi_multiplied = match chromatic_number(&blown, budget) {
        Ok((k, _)) => Some(k),
        Err(ColoringError::BudgetExceeded { .. }) => None,
        Err(e) => return Err(LiftError::Unverified(e.to_string())),
    };
    let upper = chi_multiplied.unwrap_or_else(|| greedy_color_count(&blown));
    let bound = m * chi_line;
    Ok(ChiBoundReport {
        m,
        chi_line,
        chi_multiplied,
        upper,
        bound,
        holds: upper <= bound,
    })
}
