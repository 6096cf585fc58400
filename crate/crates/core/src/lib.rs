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

//! Totally odd strong immersions of cliques in line graphs.
//!
//! The pipeline reduces a class-2 graph `H` to an edge-critical subgraph,
//! finds `Δ` edge-disjoint paths between two vertices with unit-capacity
//! flow, lifts them into `L(H)` and assembles an immersion of `K_{Δ+1}`
//! whose paths are all odd and avoid the terminals internally. Certificates
//! lift from `L(H)` to `L(mH)` through an explicit blow-up routing, and an
//! independent verifier plus a brute-force search check everything.

pub mod certificate;
pub mod coloring;
pub mod construction;
pub mod corpus;
pub mod graph;
pub mod lift;
pub mod oracle;
pub mod paths;
pub mod verify;

pub use certificate::ImmersionCertificate;
pub use graph::{EdgeId, Multigraph, VertexId};
