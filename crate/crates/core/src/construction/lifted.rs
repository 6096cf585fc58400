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

use super::ConstructionError;
use crate::graph::{LineGraphMap, Multigraph, VertexId};
use crate::paths::PathSystem;

/// A path system between `x` and `y` in the host, lifted to the line graph:
/// `q[i]` lists the host edges of `host_paths[i]` in order. The first
/// vertices of all `q[i]` are edges at `x` and the last ones edges at `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedSystem {
    pub x: VertexId,
    pub y: VertexId,
    pub host_paths: Vec<Vec<VertexId>>,
    pub q: Vec<Vec<VertexId>>,
    /// Index of the single-vertex lift of a direct `x`-`y` edge; always the
    /// last index when present.
    pub degenerate: Option<usize>,
    /// Number of lifted paths of odd length.
    pub j: usize,
}

impl LiftedSystem {
    pub fn d(&self) -> usize {
        self.q.len()
    }

    /// Length of `q[i]`, one less than the length of the host path.
    pub fn len(&self, i: usize) -> usize {
        self.q[i].len() - 1
    }

    pub fn first(&self, i: usize) -> VertexId {
        self.q[i][0]
    }

    pub fn end(&self, i: usize) -> VertexId {
        *self.q[i].last().expect("nonempty")
    }
}

pub fn lift_paths(h: &Multigraph, system: &PathSystem, map: &LineGraphMap) -> LiftedSystem {
    let lift = |p: &Vec<VertexId>| -> Vec<VertexId> {
        p.windows(2)
            .map(|w| map.vertex_of(h.edge_between(w[0], w[1]).expect("path edge exists in host")))
            .collect()
    };
    let mut pairs: Vec<(Vec<VertexId>, Vec<VertexId>)> =
        system.paths.iter().map(|p| (p.clone(), lift(p))).collect();
    // the stable sort moves the direct edge last and keeps everything else
    pairs.sort_by_key(|(_, q)| q.len() == 1);
    let degenerate = pairs.last().filter(|(_, q)| q.len() == 1).map(|_| pairs.len() - 1);
    let j = pairs.iter().filter(|(_, q)| q.len() % 2 == 0).count();
    let (host_paths, q) = pairs.into_iter().unzip();
    LiftedSystem {
        x: system.x,
        y: system.y,
        host_paths,
        q,
        degenerate,
        j,
    }
}

/// Where the extra vertex of a lifted path was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attachment {
    /// At the first internal host vertex; insert after `q[i][0]`.
    AtH1,
    /// At the second internal host vertex; insert after `q[i][1]`.
    AtH2,
}

impl Attachment {
    /// `q` with `a` spliced in at the matching position.
    pub fn insert(self, q: &[VertexId], a: VertexId) -> Vec<VertexId> {
        let at = match self {
            Attachment::AtH1 => 1,
            Attachment::AtH2 => 2,
        };
        let mut out = q[..at].to_vec();
        out.push(a);
        out.extend_from_slice(&q[at..]);
        out
    }
}

/// Lowest-id host edge outside path `i` at its first internal vertex, or
/// failing that at its second, as a line-graph vertex.
pub fn third_neighbor(
    h: &Multigraph,
    map: &LineGraphMap,
    lifted: &LiftedSystem,
    i: usize,
) -> Result<(VertexId, Attachment), ConstructionError> {
    let p = &lifted.host_paths[i];
    if p.len() < 4 {
        return Err(ConstructionError::ClaimViolated { path: i });
    }
    let on_path: Vec<usize> = lifted.q[i].iter().map(|&v| map.edge_of(v)).collect();
    for (vertex, attachment) in [(p[1], Attachment::AtH1), (p[2], Attachment::AtH2)] {
        let best = h
            .incident(vertex)
            .iter()
            .map(|&(_, e)| e)
            .filter(|e| !on_path.contains(e))
            .min();
        if let Some(e) = best {
            return Ok((map.vertex_of(e), attachment));
        }
    }
    Err(ConstructionError::ClaimViolated { path: i })
}
