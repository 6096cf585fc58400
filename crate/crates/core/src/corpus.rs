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

//! Bundled test graphs: named class-2 hosts, seeded random critical graphs
//! and a text format for graph6 corpus files.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{critical_subgraph, is_class_two, NodeBudget};
use crate::graph::generators::{
    circulant, complete, cubic_with_bridge, cycle, petersen, petersen_minus_vertex, random_bounded_degree,
    subdivided_k4,
};
use crate::graph::graph6::{self, Graph6Error};
use crate::graph::Multigraph;

pub const CORPUS_SEED: u64 = 0x0dd1_3e55;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Multigraph,
}

fn entry(name: impl Into<String>, graph: Multigraph) -> CorpusEntry {
    CorpusEntry { name: name.into(), graph }
}

/// 4-regular circulant on odd `n` with one edge removed.
fn circulant_minus_edge(n: usize, jumps: &[usize]) -> Multigraph {
    let g = circulant(n, jumps);
    g.without_edge(0)
}

pub fn named_class_two() -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = (3..=11).step_by(2).map(|n| entry(format!("C{n}"), cycle(n))).collect();
    out.push(entry("petersen", petersen()));
    out.push(entry("petersen-minus-vertex", petersen_minus_vertex()));
    out.push(entry("subdivided-k4", subdivided_k4()));
    out.push(entry("cubic-with-bridge", cubic_with_bridge()));
    out.push(entry("K5", complete(5)));
    out.push(entry("K5-minus-edge", complete(5).without_edge(0)));
    for (n, jumps) in [(7, [1, 2]), (9, [1, 2]), (11, [1, 2]), (11, [1, 3])] {
        let tag = format!("C{n}({},{})", jumps[0], jumps[1]);
        out.push(entry(tag.clone(), circulant(n, &jumps)));
        out.push(entry(format!("{tag}-minus-edge"), circulant_minus_edge(n, &jumps)));
    }
    out
}

/// Edge-critical graphs obtained by reducing seeded random class-2 graphs
/// with maximum degree 3 or 4 on 7 to 11 vertices. Names record the draw.
pub fn generated_critical(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = NodeBudget::default();
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut draw = 0;
    while out.len() < count && draw < 200 * count.max(1) {
        let n = 7 + draw % 5;
        let d = 3 + (draw / 5) % 2;
        draw += 1;
        // dense enough to be class 2 now and then
        let g = random_bounded_degree(n, d, n * d / 2, &mut rng);
        if g.max_degree() != d || !g.is_connected() || !is_class_two(&g, budget).unwrap_or(false) {
            continue;
        }
        let Ok(sub) = critical_subgraph(&g, budget) else {
            continue;
        };
        if !sub.graph.is_connected() || sub.graph.vertex_count() < 5 {
            continue;
        }
        let key = crate::oracle::canon::canonical_form(&sub.graph).expect("simple");
        if seen.insert(key) {
            out.push(entry(format!("critical-{draw}-n{n}-d{d}"), sub.graph));
        }
    }
    out
}

/// Named hosts followed by twelve generated critical graphs.
pub fn class_two_corpus() -> Vec<CorpusEntry> {
    let mut out = named_class_two();
    out.extend(generated_critical(CORPUS_SEED, 12));
    out
}

/// True when too few vertices have degree 3 or more for a subdivision of
/// `K_5` or `K_{3,3}`, which certifies planarity. False is inconclusive.
pub fn planar_by_degree_screen(g: &Multigraph) -> bool {
    let count = |k: usize| (0..g.vertex_count()).filter(|&v| g.neighbors(v).len() >= k).count();
    count(4) < 5 && count(3) < 6
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {source}")]
pub struct CorpusError {
    pub line: usize,
    pub source: Graph6Error,
}

/// One graph per line as `<graph6> [name]`; blank lines and lines starting
/// with `#` are skipped. Unnamed graphs are called `line<k>`.
pub fn parse_corpus(text: &str) -> Vec<Result<CorpusEntry, CorpusError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let mut parts = l.split_whitespace();
            let code = parts.next().expect("nonblank");
            let name = parts.next().map_or_else(|| format!("line{}", i + 1), str::to_string);
            graph6::decode(code)
                .map(|graph| CorpusEntry { name, graph })
                .map_err(|source| CorpusError { line: i + 1, source })
        })
        .collect()
}

pub fn write_corpus(entries: &[CorpusEntry]) -> Result<String, Graph6Error> {
    let mut out = String::new();
    for e in entries {
        out.push_str(&graph6::encode(&e.graph)?);
        out.push(' ');
        out.push_str(&e.name);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{flower, FlowerParams};

    #[test]
    fn named_entries_are_class_two() {
        for e in named_class_two() {
            assert!(is_class_two(&e.graph, NodeBudget::default()).unwrap(), "{}", e.name);
            assert!(e.graph.is_connected(), "{}", e.name);
        }
    }

    #[test]
    fn generated_are_critical_and_deterministic() {
        let a = generated_critical(7, 4);
        assert_eq!(a.len(), 4);
        assert_eq!(a, generated_critical(7, 4));
        for e in &a {
            let d = e.graph.max_degree();
            assert!((3..=4).contains(&d));
            assert!(is_class_two(&e.graph, NodeBudget::default()).unwrap());
        }
    }

    #[test]
    fn bundled_file_matches_generator() {
        let bundled = include_str!("../corpus/class2.g6");
        let parsed: Vec<CorpusEntry> = parse_corpus(bundled).into_iter().map(Result::unwrap).collect();
        assert_eq!(parsed.len(), class_two_corpus().len());
        for (p, e) in parsed.iter().zip(class_two_corpus()) {
            assert_eq!(p.name, e.name);
            assert!(p.graph.same_structure(&crate::graph::io::normalize(&e.graph)));
        }
    }

    #[test]
    fn corpus_parse_errors_are_per_line() {
        let got = parse_corpus("# header\nC~ k4\n\nC\n");
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].as_ref().unwrap().name, "k4");
        assert_eq!(got[1].as_ref().unwrap_err().line, 4);
    }

    #[test]
    fn flower_screen() {
        assert!(planar_by_degree_screen(&flower(4, FlowerParams::default()).graph));
        assert!(!planar_by_degree_screen(&complete(5)));
    }
}
