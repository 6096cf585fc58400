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

//! Brute-force search for totally odd (strong) clique immersions and the
//! small-graph conjecture scanner built on it.

pub mod canon;
mod scan;
mod search;

pub use scan::{scan_conjecture, LedgerEntry, ScanLedger, ScanOutcome};
pub use search::{find_immersion, find_immersion_with_terminals, shortest_odd_path};

use std::time::Duration;

use crate::certificate::ImmersionCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_paths_per_pair: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            max_paths_per_pair: 100_000,
            time_limit: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchFlags {
    pub strong: bool,
    pub totally_odd: bool,
}

impl SearchFlags {
    pub const STRONG_ODD: SearchFlags = SearchFlags {
        strong: true,
        totally_odd: true,
    };
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Box<ImmersionCertificate>),
    /// The whole search space was enumerated without success.
    ExhaustedNo,
    BudgetOut,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&ImmersionCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}
