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

//! Independent certificate checks. Nothing here looks at how a certificate
//! was produced; every verdict is replayable from the certificate and the
//! host graph alone.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::certificate::ImmersionCertificate;
use crate::graph::{Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("certificate host does not match the given graph")]
    HostMismatch,
    #[error("verification needs a simple host graph")]
    MultigraphHost,
}

/// Which checks to run. `immersion` covers terminals, path validity and
/// edge-disjointness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyFlags {
    pub immersion: bool,
    pub strong: bool,
    pub totally_odd: bool,
    pub clique_order: Option<usize>,
}

impl VerifyFlags {
    pub fn full(t: usize) -> Self {
        VerifyFlags {
            immersion: true,
            strong: true,
            totally_odd: true,
            clique_order: Some(t),
        }
    }

    /// Everything the certificate claims about itself.
    pub fn claimed(cert: &ImmersionCertificate) -> Self {
        VerifyFlags {
            immersion: true,
            strong: cert.properties.strong,
            totally_odd: cert.properties.totally_odd,
            clique_order: Some(cert.t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Terminals,
    Paths,
    EdgeDisjoint,
    Strong,
    TotallyOdd,
    CliqueOrder,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Terminals => "terminals",
            Check::Paths => "paths",
            Check::EdgeDisjoint => "edge-disjoint",
            Check::Strong => "strong",
            Check::TotallyOdd => "totally-odd",
            Check::CliqueOrder => "clique-order",
        })
    }
}

/// Concrete evidence of a failed check. `path` fields index
/// `ImmersionCertificate::paths`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    TerminalCount { declared: usize, actual: usize },
    DuplicateTerminal { vertex: VertexId },
    TerminalOutOfRange { vertex: VertexId },
    EmptyPath { path: usize },
    PairNotTerminals { path: usize },
    WrongEndpoints { path: usize },
    VertexOutOfRange { path: usize, vertex: VertexId },
    NotAnEdge { path: usize, u: VertexId, v: VertexId },
    RepeatedVertex { path: usize, vertex: VertexId },
    EdgeReused { u: VertexId, v: VertexId, first: usize, second: usize },
    InteriorTerminal { path: usize, vertex: VertexId },
    EvenPath { path: usize, length: usize },
    OrderMismatch { declared: usize, expected: usize },
    MissingPair { a: VertexId, b: VertexId },
    DuplicatePair { a: VertexId, b: VertexId },
    PathCount { expected: usize, actual: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::TerminalCount { declared, actual } => {
                write!(f, "declared t={declared} but {actual} terminals listed")
            }
            Witness::DuplicateTerminal { vertex } => write!(f, "terminal {vertex} listed twice"),
            Witness::TerminalOutOfRange { vertex } => write!(f, "terminal {vertex} not in host"),
            Witness::EmptyPath { path } => write!(f, "path {path} has no edges"),
            Witness::PairNotTerminals { path } => {
                write!(f, "path {path} pair is not two distinct terminals")
            }
            Witness::WrongEndpoints { path } => write!(f, "path {path} does not join its pair"),
            Witness::VertexOutOfRange { path, vertex } => {
                write!(f, "path {path} visits unknown vertex {vertex}")
            }
            Witness::NotAnEdge { path, u, v } => write!(f, "path {path} steps {u}-{v}, not an edge"),
            Witness::RepeatedVertex { path, vertex } => {
                write!(f, "path {path} revisits vertex {vertex}")
            }
            Witness::EdgeReused { u, v, first, second } => {
                write!(f, "edge {u}-{v} used by paths {first} and {second}")
            }
            Witness::InteriorTerminal { path, vertex } => {
                write!(f, "terminal {vertex} is interior to path {path}")
            }
            Witness::EvenPath { path, length } => write!(f, "path {path} has even length {length}"),
            Witness::OrderMismatch { declared, expected } => {
                write!(f, "certificate has t={declared}, expected {expected}")
            }
            Witness::MissingPair { a, b } => write!(f, "no path joins terminals {a} and {b}"),
            Witness::DuplicatePair { a, b } => write!(f, "terminals {a} and {b} joined twice"),
            Witness::PathCount { expected, actual } => {
                write!(f, "expected {expected} paths, found {actual}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall
    }

    pub fn result(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn failed(&self, check: Check) -> bool {
        self.result(check).is_some_and(|c| !c.passed)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.checks.iter().flat_map(|c| c.witnesses.iter())
    }

    /// One line per check, then the overall verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("PASS {}\n", c.check));
            } else {
                let w: Vec<String> = c.witnesses.iter().map(|w| w.to_string()).collect();
                out.push_str(&format!("FAIL {}: {}\n", c.check, w.join("; ")));
            }
        }
        out.push_str(if self.overall { "overall PASS\n" } else { "overall FAIL\n" });
        out
    }
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

pub fn verify(
    g: &Multigraph,
    cert: &ImmersionCertificate,
    flags: VerifyFlags,
) -> Result<VerificationReport, VerifyError> {
    if !g.is_simple() {
        return Err(VerifyError::MultigraphHost);
    }
    if !cert.host.matches(g) {
        return Err(VerifyError::HostMismatch);
    }
    let n = g.vertex_count();
    let edges: HashSet<(VertexId, VertexId)> = g.edges().iter().map(|&(u, v)| key(u, v)).collect();
    let terminal_set: HashSet<VertexId> = cert.terminals.iter().copied().collect();
    let mut checks = Vec::new();
    let mut push = |check, witnesses: Vec<Witness>| {
        checks.push(CheckResult {
            check,
            passed: witnesses.is_empty(),
            witnesses,
        })
    };

    if flags.immersion {
        // terminals
        let mut w = Vec::new();
        if cert.terminals.len() != cert.t {
            w.push(Witness::TerminalCount {
                declared: cert.t,
                actual: cert.terminals.len(),
            });
        }
        let mut seen = HashSet::new();
        for &v in &cert.terminals {
            if v >= n {
                w.push(Witness::TerminalOutOfRange { vertex: v });
            }
            if !seen.insert(v) {
                w.push(Witness::DuplicateTerminal { vertex: v });
            }
        }
        push(Check::Terminals, w);

        // each path is a simple path of the host joining its pair
        let mut w = Vec::new();
        for (i, p) in cert.paths.iter().enumerate() {
            let [a, b] = p.pair;
            if a == b || !terminal_set.contains(&a) || !terminal_set.contains(&b) {
                w.push(Witness::PairNotTerminals { path: i });
            }
            if p.vertices.len() < 2 {
                w.push(Witness::EmptyPath { path: i });
                continue;
            }
            if p.vertices[0] != a || *p.vertices.last().unwrap() != b {
                w.push(Witness::WrongEndpoints { path: i });
            }
            let mut visited = HashSet::new();
            for &v in &p.vertices {
                if v >= n {
                    w.push(Witness::VertexOutOfRange { path: i, vertex: v });
                } else if !visited.insert(v) {
                    w.push(Witness::RepeatedVertex { path: i, vertex: v });
                }
            }
            for s in p.vertices.windows(2) {
                if s[0] < n && s[1] < n && !edges.contains(&key(s[0], s[1])) {
                    w.push(Witness::NotAnEdge { path: i, u: s[0], v: s[1] });
                }
            }
        }
        push(Check::Paths, w);

        // edge-disjointness across all paths
        let mut w = Vec::new();
        let mut owner: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for (i, p) in cert.paths.iter().enumerate() {
            for s in p.vertices.windows(2) {
                let k = key(s[0], s[1]);
                if let Some(&first) = owner.get(&k) {
                    w.push(Witness::EdgeReused {
                        u: k.0,
                        v: k.1,
                        first,
                        second: i,
                    });
                } else {
                    owner.insert(k, i);
                }
            }
        }
        push(Check::EdgeDisjoint, w);
    }

    // no terminal interior to any path
    if flags.strong {
        let mut w = Vec::new();
        for (i, p) in cert.paths.iter().enumerate() {
            if p.vertices.len() > 2 {
                for &v in &p.vertices[1..p.vertices.len() - 1] {
                    if terminal_set.contains(&v) {
                        w.push(Witness::InteriorTerminal { path: i, vertex: v });
                    }
                }
            }
        }
        push(Check::Strong, w);
    }

    // every path odd
    if flags.totally_odd {
        let w = cert
            .paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.length() % 2 == 0)
            .map(|(i, p)| Witness::EvenPath {
                path: i,
                length: p.length(),
            })
            .collect();
        push(Check::TotallyOdd, w);
    }

    // one path for every terminal pair
    if let Some(t) = flags.clique_order {
        let mut w = Vec::new();
        if cert.t != t {
            w.push(Witness::OrderMismatch {
                declared: cert.t,
                expected: t,
            });
        }
        let expected = t * t.saturating_sub(1) / 2;
        if cert.paths.len() != expected {
            w.push(Witness::PathCount {
                expected,
                actual: cert.paths.len(),
            });
        }
        let mut covered: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for p in &cert.paths {
            *covered.entry(key(p.pair[0], p.pair[1])).or_default() += 1;
        }
        for (i, &a) in cert.terminals.iter().enumerate() {
            for &b in &cert.terminals[i + 1..] {
                match covered.get(&key(a, b)) {
                    None => w.push(Witness::MissingPair { a, b }),
                    Some(&c) if c > 1 => w.push(Witness::DuplicatePair { a, b }),
                    _ => {}
                }
            }
        }
        push(Check::CliqueOrder, w);
    }

    let overall = checks.iter().all(|c| c.passed);
    Ok(VerificationReport { checks, overall })
}
