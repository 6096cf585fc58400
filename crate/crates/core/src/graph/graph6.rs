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

//! graph6 encoding for simple graphs, used for corpus files and canonical
//! forms.

use thiserror::Error;

use super::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("byte {0:#x} outside the graph6 range")]
    BadByte(u8),
    #[error("truncated graph6 string")]
    Truncated,
    #[error("graph6 string has trailing bytes")]
    Trailing,
    #[error("graph6 only encodes simple graphs")]
    NotSimple,
    #[error("graphs with more than 258047 vertices are not supported")]
    TooLarge,
}

pub fn encode(g: &Multigraph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge);
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

pub fn decode(s: &str) -> Result<Multigraph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let mut data = Vec::with_capacity(bytes.len());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
        data.push(b - 63);
    }
    let (n, rest) = match data.first() {
        None => return Err(Graph6Error::Truncated),
        Some(63) => {
            if data.len() < 4 || data[1] == 63 {
                // 8-byte sizes are beyond what we support
                return Err(if data.len() < 4 {
                    Graph6Error::Truncated
                } else {
                    Graph6Error::TooLarge
                });
            }
            let n = ((data[1] as usize) << 12) | ((data[2] as usize) << 6) | data[3] as usize;
            (n, &data[4..])
        }
        Some(&n) => (n as usize, &data[1..]),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    if rest.len() < needed {
        return Err(Graph6Error::Truncated);
    }
    if rest.len() > needed {
        return Err(Graph6Error::Trailing);
    }
    let mut g = Multigraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("valid pair");
            }
            k += 1;
        }
    }
    Ok(g)
}
