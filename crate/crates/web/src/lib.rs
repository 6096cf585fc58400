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

//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes and returns JSON strings. The `*_json` functions hold
//! the logic so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use oddimm::construction::construct_immersion;
use oddimm::corpus::named_class_two;
use oddimm::graph::generators::complete;
use oddimm::graph::io::{parse_graph, serialize_graph};
use oddimm::graph::{graph6, line_graph, multiply_edges, Multigraph};
use oddimm::lift::{lift_certificate, route};
use oddimm::verify::{verify, VerifyFlags};
use oddimm::ImmersionCertificate;

const MAX_M: usize = 6;
const MAX_ROUTE_LEN: usize = 12;

fn parse(text: &str) -> Result<Multigraph, String> {
    parse_graph(text).or_else(|e| {
        let t = text.trim();
        if t.is_empty() || t.contains(char::is_whitespace) {
            return Err(e.to_string());
        }
        graph6::decode(t).map_err(|g6| format!("{e}; as graph6: {g6}"))
    })
}

fn drawing(host: &Multigraph, cert: &ImmersionCertificate) -> Result<Value, String> {
    let report = verify(host, cert, VerifyFlags::claimed(cert)).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": host.vertex_count(),
        "edges": host.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "t": cert.t,
        "terminals": cert.terminals,
        "paths": cert.paths.iter().map(|p| &p.vertices).collect::<Vec<_>>(),
        "case": cert.provenance.case,
        "events": cert.provenance.events,
        "report": report.to_text(),
        "passed": report.passed(),
        "certificate": cert.to_json(),
    }))
}

/// Example graphs as `{name, text}` in the text format.
pub fn presets_json() -> String {
    let mut list = vec![("K4".to_string(), complete(4))];
    list.extend(
        named_class_two()
            .into_iter()
            .filter(|e| e.graph.edge_count() <= 24)
            .map(|e| (e.name, e.graph)),
    );
    let v: Vec<Value> = list
        .into_iter()
        .map(|(name, g)| json!({ "name": name, "text": serialize_graph(&g) }))
        .collect();
    Value::Array(v).to_string()
}

/// Certificate for `L(H)` plus a drawing of `L(H)`.
pub fn construct_json(graph_text: &str) -> Result<String, String> {
    let h = parse(graph_text)?;
    let cert = construct_immersion(&h).map_err(|e| e.to_string())?;
    let lg = line_graph(&h).line_graph;
    Ok(drawing(&lg, &cert)?.to_string())
}

/// Lifts a certificate on `L(H)` to `L(mH)`.
pub fn lift_json(graph_text: &str, cert_json: &str, m: usize) -> Result<String, String> {
    if !(1..=MAX_M).contains(&m) {
        return Err(format!("m must be in 1..={MAX_M}"));
    }
    let h = parse(graph_text)?;
    let cert = ImmersionCertificate::from_json(cert_json).map_err(|e| e.to_string())?;
    let lifted = lift_certificate(&cert, &h, m).map_err(|e| e.to_string())?;
    let host = line_graph(&multiply_edges(&h, m).map_err(|e| e.to_string())?).line_graph;
    Ok(drawing(&host, &lifted)?.to_string())
}

/// Copy sequences of one routed path: `rows[i][j]` goes from copy `i` to
/// copy `j` in `len` steps.
pub fn route_json(m: usize, len: usize) -> Result<String, String> {
    if !(1..=MAX_M).contains(&m) || !(1..=MAX_ROUTE_LEN).contains(&len) {
        return Err(format!("need 1 <= m <= {MAX_M} and 1 <= length <= {MAX_ROUTE_LEN}"));
    }
    let r = route(m, len);
    let rows: Vec<Vec<&[usize]>> = (0..m).map(|i| (0..m).map(|j| r.sequence(i, j)).collect()).collect();
    let bijective: Vec<bool> = (0..len).map(|t| r.transition_is_bijective(t)).collect();
    Ok(json!({ "m": m, "len": len, "rows": rows, "bijective": bijective }).to_string())
}

#[wasm_bindgen]
pub fn presets() -> String {
    presets_json()
}

#[wasm_bindgen]
pub fn construct(graph_text: &str) -> Result<String, JsValue> {
    construct_json(graph_text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lift(graph_text: &str, cert_json: &str, m: usize) -> Result<String, JsValue> {
    lift_json(graph_text, cert_json, m).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn route_table(m: usize, len: usize) -> Result<String, JsValue> {
    route_json(m, len).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const C5: &str = "p mg 5 5\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 5 1\ne 1 5 1\n";

    fn field(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn construct_and_lift_c5() {
        let v = field(&construct_json(C5).unwrap());
        assert_eq!(v["t"], 3);
        assert_eq!(v["passed"], true);
        let cert = v["certificate"].as_str().unwrap();
        let lifted = field(&lift_json(C5, cert, 3).unwrap());
        assert_eq!(lifted["t"], 9);
        assert_eq!(lifted["n"], 15);
        assert_eq!(lifted["passed"], true);
        assert!(lift_json(C5, cert, 0).is_err());
    }

    #[test]
    fn every_preset_constructs() {
        let list = field(&presets_json());
        for p in list.as_array().unwrap() {
            let v = field(&construct_json(p["text"].as_str().unwrap()).unwrap());
            assert_eq!(v["passed"], true, "{}", p["name"]);
        }
    }

    #[test]
    fn graph6_input_and_errors() {
        assert!(construct_json("IheA@GUAo").is_ok());
        assert!(construct_json("p mg 2 1\ne 1 3 1\n").is_err());
    }

    #[test]
    fn route_rows() {
        let v = field(&route_json(2, 3).unwrap());
        assert_eq!(v["rows"][1][0], json!([1, 1, 1, 0]));
        assert!(v["bijective"].as_array().unwrap().iter().all(|b| b == true));
        assert!(route_json(7, 3).is_err());
    }
}
